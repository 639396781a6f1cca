use crate::space::DecisionSpace;

fn unit_step(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Pairwise gravitational accelerations. Each probe is attracted toward every
/// probe of equal-or-higher fitness:
///
/// ```text
/// A[p][i] = sum over k != p of U(M_k - M_p) * (M_k - M_p)^alpha
///           * (R_k[i] - R_p[i]) / d_pk^beta
/// ```
///
/// Lower-fitness probes are gated out by the unit step and exact ties
/// contribute zero through the (M_k - M_p) factor. Coincident probe pairs
/// (d_pk = 0) are skipped to avoid a zero denominator.
pub fn compute_accelerations(
    positions: &[Vec<f64>],
    fitnesses: &[f64],
    alpha: f64,
    beta: f64,
) -> Vec<Vec<f64>> {
    let np = positions.len();
    assert!(np >= 2, "need at least two probes");
    assert_eq!(fitnesses.len(), np);
    let nd = positions[0].len();

    let mut accel = vec![vec![0.0; nd]; np];
    for p in 0..np {
        for k in 0..np {
            if k == p {
                continue;
            }
            let dm = fitnesses[k] - fitnesses[p];
            if unit_step(dm) == 0.0 || dm == 0.0 {
                continue;
            }
            let mut dist_sq = 0.0;
            for i in 0..nd {
                let dx = positions[k][i] - positions[p][i];
                dist_sq += dx * dx;
            }
            if dist_sq == 0.0 {
                continue;
            }
            let dist = dist_sq.sqrt();
            let dist_pow = if beta == 1.0 { dist } else { dist.powf(beta) };
            let num_pow = if alpha == 1.0 { dm } else { dm.powf(alpha) };
            for i in 0..nd {
                let dx = positions[k][i] - positions[p][i];
                // (dx/dist) stays in [-1, 1], so even sentinel-sized fitness
                // gaps cannot overflow the term at beta = 1.
                accel[p][i] += dx / dist_pow * num_pow;
            }
        }
    }
    accel
}

/// Unit-coefficient position update: R_j = R_{j-1} + A_{j-1}.
pub fn update_positions(prev_positions: &[Vec<f64>], prev_accels: &[Vec<f64>]) -> Vec<Vec<f64>> {
    prev_positions
        .iter()
        .zip(prev_accels)
        .map(|(r, a)| r.iter().zip(a).map(|(x, dx)| x + dx).collect())
        .collect()
}

/// Pull out-of-bounds coordinates back inside, a fraction `frep` of the way
/// from the violated bound toward the probe's previous position. In-bounds
/// coordinates are untouched; the result always satisfies the current bounds.
pub fn retrieve_errant_probes(
    current: &mut [Vec<f64>],
    previous: &[Vec<f64>],
    space: &DecisionSpace,
    frep: f64,
) {
    for (probe, prev) in current.iter_mut().zip(previous) {
        for i in 0..space.nd() {
            let (lo, hi) = (space.lo(i), space.hi(i));
            if probe[i] < lo {
                probe[i] = (lo + frep * (prev[i] - lo)).max(lo);
            }
            if probe[i] > hi {
                probe[i] = (hi - frep * (hi - prev[i])).min(hi);
            }
        }
    }
}

/// Reposition errant probes along their previous acceleration direction
/// instead of clamping coordinate-by-coordinate.
///
/// A probe qualifies when some coordinate lies outside the box and carried a
/// nonzero acceleration at the previous step; probes whose offending
/// coordinates had zero acceleration are left to the clamping retrieval. The
/// probe is placed at prev + frep * d_max * A/|A|, where d_max is the
/// distance from the previous position to the nearest boundary plane along A
/// (smallest nonnegative crossing parameter over every dimension and both
/// boundaries).
pub fn retrieve_errant_probes_directional(
    current: &mut [Vec<f64>],
    previous: &[Vec<f64>],
    prev_accels: &[Vec<f64>],
    space: &DecisionSpace,
    frep: f64,
) {
    let nd = space.nd();
    for ((probe, prev), accel) in current.iter_mut().zip(previous).zip(prev_accels) {
        let errant =
            (0..nd).any(|i| (probe[i] > space.hi(i) || probe[i] < space.lo(i)) && accel[i] != 0.0);
        if !errant {
            continue;
        }
        let mut eta_star = f64::INFINITY;
        for i in 0..nd {
            if accel[i] == 0.0 {
                continue;
            }
            for bound in [space.lo(i), space.hi(i)] {
                let eta = (bound - prev[i]) / accel[i];
                if eta >= 0.0 && eta <= eta_star {
                    eta_star = eta;
                }
            }
        }
        if !eta_star.is_finite() {
            continue;
        }
        let mag: f64 = accel.iter().map(|a| a * a).sum::<f64>().sqrt();
        let d_max = eta_star * mag;
        for i in 0..nd {
            probe[i] = prev[i] + frep * d_max * accel[i] / mag;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_fitness_gives_zero_accelerations() {
        let pos = vec![vec![0.0, 0.0], vec![1.0, 2.0]];
        let acc = compute_accelerations(&pos, &[3.0, 3.0], 1.0, 1.0);
        assert_eq!(acc, vec![vec![0.0, 0.0], vec![0.0, 0.0]]);
    }

    #[test]
    fn best_probe_feels_nothing() {
        let pos = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]];
        let acc = compute_accelerations(&pos, &[1.0, 5.0, 2.0], 1.0, 1.0);
        assert_eq!(acc[1], vec![0.0, 0.0]);
        assert!(acc[0][0] != 0.0);
    }

    #[test]
    fn one_dimensional_pair_hand_value() {
        // (1-0)^1 * (1-0)/1^1 = +1 toward the better probe; the better probe
        // is gated out entirely.
        let pos = vec![vec![0.0], vec![1.0]];
        let acc = compute_accelerations(&pos, &[0.0, 1.0], 1.0, 1.0);
        assert_eq!(acc, vec![vec![1.0], vec![0.0]]);
    }

    #[test]
    fn coincident_probes_are_skipped() {
        let pos = vec![vec![2.0, 2.0], vec![2.0, 2.0]];
        let acc = compute_accelerations(&pos, &[0.0, 9.0], 1.0, 1.0);
        assert_eq!(acc, vec![vec![0.0, 0.0], vec![0.0, 0.0]]);
    }

    #[test]
    fn position_update_is_plain_sum() {
        let prev = vec![vec![3.0], vec![1.0]];
        let acc = vec![vec![-0.5], vec![0.0]];
        assert_eq!(update_positions(&prev, &acc), vec![vec![2.5], vec![1.0]]);
    }

    fn space_0_10() -> DecisionSpace {
        DecisionSpace::new(&[(0.0, 10.0)]).unwrap()
    }

    #[test]
    fn clamps_low_side_toward_previous() {
        let mut cur = vec![vec![-2.0]];
        let prev = vec![vec![4.0]];
        retrieve_errant_probes(&mut cur, &prev, &space_0_10(), 0.5);
        assert_eq!(cur[0][0], 2.0);
    }

    #[test]
    fn clamps_high_side_toward_previous() {
        let mut cur = vec![vec![12.0]];
        let prev = vec![vec![8.0]];
        retrieve_errant_probes(&mut cur, &prev, &space_0_10(), 0.5);
        assert_eq!(cur[0][0], 9.0);
    }

    #[test]
    fn in_bounds_coordinates_untouched() {
        let mut cur = vec![vec![7.0]];
        let prev = vec![vec![1.0]];
        retrieve_errant_probes(&mut cur, &prev, &space_0_10(), 0.5);
        assert_eq!(cur[0][0], 7.0);
    }

    #[test]
    fn directional_one_dimensional_hand_value() {
        // prev = 8, A = +4 pushed the probe to 12; eta* = (10-8)/4 = 0.5,
        // d_max = 2, landing at 8 + 0.5*2 = 9.
        let mut cur = vec![vec![12.0]];
        let prev = vec![vec![8.0]];
        let acc = vec![vec![4.0]];
        retrieve_errant_probes_directional(&mut cur, &prev, &acc, &space_0_10(), 0.5);
        assert_eq!(cur[0][0], 9.0);
    }

    #[test]
    fn directional_leaves_in_bounds_probe_alone() {
        let mut cur = vec![vec![5.0]];
        let prev = vec![vec![4.0]];
        let acc = vec![vec![1.0]];
        retrieve_errant_probes_directional(&mut cur, &prev, &acc, &space_0_10(), 1.0);
        assert_eq!(cur[0][0], 5.0);
    }

    #[test]
    fn directional_two_dimensional_hand_value() {
        let space = DecisionSpace::new(&[(0.0, 10.0), (0.0, 10.0)]).unwrap();
        let mut cur = vec![vec![11.0, 5.0]];
        let prev = vec![vec![9.0, 5.0]];
        let acc = vec![vec![2.0, 0.0]];
        retrieve_errant_probes_directional(&mut cur, &prev, &acc, &space, 1.0);
        assert_eq!(cur[0], vec![10.0, 5.0]);
    }

    #[test]
    fn directional_skips_zero_acceleration_offender() {
        // Offending coordinate has zero prior acceleration: left as-is for
        // the clamping pass.
        let space = DecisionSpace::new(&[(0.0, 10.0), (0.0, 10.0)]).unwrap();
        let mut cur = vec![vec![11.0, 5.0]];
        let prev = vec![vec![9.0, 5.0]];
        let acc = vec![vec![0.0, 3.0]];
        retrieve_errant_probes_directional(&mut cur, &prev, &acc, &space, 1.0);
        assert_eq!(cur[0], vec![11.0, 5.0]);
    }
}
