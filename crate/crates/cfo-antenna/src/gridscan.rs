use cfo_core::{DecisionSpace, Objective, ObjectiveError};

/// Exhaustive scan of a 2-D objective over the inclusive n1 x n2 lattice
/// spanning the space's current bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct GridScan {
    pub n1: usize,
    pub n2: usize,
    /// (x1, x2, value) rows; the first axis varies slowest.
    pub points: Vec<(f64, f64, f64)>,
    /// Lattice argmax (x1, x2, value); on exact ties the later point in scan
    /// order wins.
    pub best: (f64, f64, f64),
}

/// Evaluate `objective` on every lattice point. Lattice coordinates are
/// lo + i*(hi - lo)/(n - 1), endpoints included.
pub fn grid_scan<O: Objective + ?Sized>(
    objective: &O,
    space: &DecisionSpace,
    n1: usize,
    n2: usize,
) -> Result<GridScan, ObjectiveError> {
    assert_eq!(space.nd(), 2, "grid scan is for 2-D spaces");
    assert!(n1 >= 2 && n2 >= 2, "need at least a 2x2 lattice");
    let step1 = (space.hi(0) - space.lo(0)) / (n1 - 1) as f64;
    let step2 = (space.hi(1) - space.lo(1)) / (n2 - 1) as f64;

    let mut points = Vec::with_capacity(n1 * n2);
    let mut best = (0.0, 0.0, f64::NEG_INFINITY);
    for i1 in 0..n1 {
        // clamped: the endpoint arithmetic may overshoot the bound by ulps
        let x1 = (space.lo(0) + i1 as f64 * step1).clamp(space.lo(0), space.hi(0));
        for i2 in 0..n2 {
            let x2 = (space.lo(1) + i2 as f64 * step2).clamp(space.lo(1), space.hi(1));
            let value = objective.evaluate(&[x1, x2])?;
            if value >= best.2 {
                best = (x1, x2, value);
            }
            points.push((x1, x2, value));
        }
    }
    Ok(GridScan {
        n1,
        n2,
        points,
        best,
    })
}
