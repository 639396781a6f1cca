use crate::error::SettingsError;
use crate::space::DecisionSpace;

/// Two-phase initial probe distribution: probe lines parallel to each axis.
///
/// First every coordinate of every probe is set to the point a fraction
/// `gamma` along its dimension's extent; then dimension `i`'s block of `ppd`
/// probes is spread uniformly from the lower to the upper bound along
/// coordinate `i`. With nd = 1 there is a single uniform line and gamma has
/// no off-line coordinates to set.
///
/// np = ppd * nd probes. `ppd` must be >= 2, and even unless nd = 1.
pub fn initial_probe_distribution(
    space: &DecisionSpace,
    ppd: usize,
    gamma: f64,
) -> Result<Vec<Vec<f64>>, SettingsError> {
    if ppd < 2 {
        return Err(SettingsError::ProbesPerDimensionTooSmall(ppd));
    }
    if space.nd() > 1 && ppd % 2 != 0 {
        return Err(SettingsError::OddProbesPerDimension(ppd));
    }
    let nd = space.nd();
    let np = ppd * nd;

    // every placed coordinate is clamped into the box: the upper-endpoint
    // arithmetic (lo + k*delta, or gamma = 1) may overshoot the bound by a
    // few ulps, and step-0 probes never pass through errant-probe retrieval
    let mut positions = vec![vec![0.0; nd]; np];
    for i in 0..nd {
        let on_diagonal =
            (space.lo(i) + gamma * (space.hi(i) - space.lo(i))).clamp(space.lo(i), space.hi(i));
        for probe in positions.iter_mut() {
            probe[i] = on_diagonal;
        }
    }
    for i in 0..nd {
        let delta = (space.hi(i) - space.lo(i)) / (ppd - 1) as f64;
        for k in 0..ppd {
            let p = k + ppd * i;
            positions[p][i] =
                (space.lo(i) + k as f64 * delta).clamp(space.lo(i), space.hi(i));
        }
    }
    Ok(positions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_box(nd: usize) -> DecisionSpace {
        DecisionSpace::new(&vec![(0.0, 1.0); nd]).unwrap()
    }

    #[test]
    fn two_by_two_gamma_zero() {
        let p = initial_probe_distribution(&unit_box(2), 2, 0.0).unwrap();
        assert_eq!(
            p,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![0.0, 0.0],
                vec![0.0, 1.0],
            ]
        );
    }

    #[test]
    fn two_by_two_gamma_half() {
        let p = initial_probe_distribution(&unit_box(2), 2, 0.5).unwrap();
        assert_eq!(
            p,
            vec![
                vec![0.0, 0.5],
                vec![1.0, 0.5],
                vec![0.5, 0.0],
                vec![0.5, 1.0],
            ]
        );
    }

    #[test]
    fn one_dimensional_line_ignores_gamma() {
        for gamma in [0.0, 0.25, 1.0] {
            let p = initial_probe_distribution(&unit_box(1), 3, gamma).unwrap();
            assert_eq!(p, vec![vec![0.0], vec![0.5], vec![1.0]]);
        }
    }

    #[test]
    fn rejects_ppd_one_and_odd_multidim() {
        assert!(initial_probe_distribution(&unit_box(2), 1, 0.0).is_err());
        assert!(initial_probe_distribution(&unit_box(2), 3, 0.0).is_err());
        assert!(initial_probe_distribution(&unit_box(1), 3, 0.0).is_ok());
    }

    #[test]
    fn all_probes_inside_the_box() {
        let space = DecisionSpace::new(&[(-3.0, 5.0), (10.0, 20.0), (0.0, 0.1)]).unwrap();
        for gamma in [0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0] {
            let probes = initial_probe_distribution(&space, 6, gamma).unwrap();
            assert_eq!(probes.len(), 18);
            for p in &probes {
                assert!(space.contains(p));
            }
        }
    }

    #[test]
    fn line_endpoints_never_overshoot_the_bound() {
        // 0.05 + 5*(10.6/5) lands above 10.65 by a couple of ulps without
        // the clamp; the resistor-height box of the monopole problem hits
        // exactly this
        let space = DecisionSpace::new(&[(0.0, 1000.0), (0.05, 10.65)]).unwrap();
        for ppd in [2, 4, 6] {
            for gamma in [0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0] {
                let probes = initial_probe_distribution(&space, ppd, gamma).unwrap();
                for p in &probes {
                    assert!(space.contains(p), "ppd={ppd} gamma={gamma}: {p:?}");
                }
            }
        }
    }
}
