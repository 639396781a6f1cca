//! Constant tables for the table-driven benchmark functions.

/// Shekel's-foxholes 2x25 grid: row 0 cycles {-32,-16,0,16,32}; row 1 repeats
/// each value in blocks of five.
pub fn foxholes_table() -> [[f64; 25]; 2] {
    let cycle = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut a = [[0.0; 25]; 2];
    for j in 0..25 {
        a[0][j] = cycle[j % 5];
        a[1][j] = cycle[j / 5];
    }
    a
}

pub const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];

/// Stored as the divisors: b_j = 1/KOWALIK_B_INV[j].
pub const KOWALIK_B_INV: [f64; 11] = [
    0.25, 0.50, 1.00, 2.00, 4.00, 6.00, 8.00, 10.0, 12.0, 14.0, 16.0,
];

pub const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];

pub const HARTMAN3_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.36890, 0.1170, 0.2673],
    [0.46990, 0.4387, 0.7470],
    [0.10910, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

pub const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.00, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.00, 3.50, 1.70, 10.0, 17.0, 8.0],
    [17.0, 8.00, 0.05, 10.0, 0.1, 14.0],
];

pub const HARTMAN6_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.13120, 0.1696, 0.5569, 0.01240, 0.8283, 0.5886],
    [0.23290, 0.4135, 0.8307, 0.37360, 0.1004, 0.9991],
    [0.23480, 0.1415, 0.3522, 0.28830, 0.3047, 0.6650],
    [0.40470, 0.8828, 0.8732, 0.57430, 0.1091, 0.0381],
];

pub const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];

pub const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn foxholes_rows_cycle_and_block_repeat() {
        let a = foxholes_table();
        assert_eq!(&a[0][..5], &[-32.0, -16.0, 0.0, 16.0, 32.0]);
        assert_eq!(a[0][5], -32.0);
        assert_eq!(&a[1][..5], &[-32.0; 5]);
        assert_eq!(a[1][5], -16.0);
        assert_eq!(a[1][24], 32.0);
    }
}
