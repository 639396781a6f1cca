use std::fmt;

/// Dimensionality rule for a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Fixed(usize),
    /// n-D family; any dimension count at or above the minimum is accepted.
    AnyAtLeast(usize),
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Fixed(n) => write!(f, "{n}"),
            Dimension::AnyAtLeast(n) => write!(f, ">={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
    Sgo,
    Gp,
    Step,
    Schwefel226,
    Colville,
    Griewank,
    Himmelblau,
    Rosenbrock,
    Sphere,
    HimmelblauNlo,
    Tripod,
    RosenbrockF6,
    CompressionSpring,
    GearTrain,
    ParrottF4,
}

impl BenchmarkId {
    pub fn as_str(&self) -> &'static str {
        use BenchmarkId::*;
        match self {
            F1 => "F1",
            F2 => "F2",
            F3 => "F3",
            F4 => "F4",
            F5 => "F5",
            F6 => "F6",
            F7 => "F7",
            F8 => "F8",
            F9 => "F9",
            F10 => "F10",
            F11 => "F11",
            F12 => "F12",
            F13 => "F13",
            F14 => "F14",
            F15 => "F15",
            F16 => "F16",
            F17 => "F17",
            F18 => "F18",
            F19 => "F19",
            F20 => "F20",
            F21 => "F21",
            F22 => "F22",
            F23 => "F23",
            Sgo => "SGO",
            Gp => "GP",
            Step => "STEP",
            Schwefel226 => "SCHWEFEL_226",
            Colville => "COLVILLE",
            Griewank => "GRIEWANK",
            Himmelblau => "HIMMELBLAU",
            Rosenbrock => "ROSENBROCK",
            Sphere => "SPHERE",
            HimmelblauNlo => "HIMMELBLAUNLO",
            Tripod => "TRIPOD",
            RosenbrockF6 => "ROSENBROCKF6",
            CompressionSpring => "COMPRESSIONSPRING",
            GearTrain => "GEARTRAIN",
            ParrottF4 => "ParrottF4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::all()
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
    }

    pub fn all() -> &'static [BenchmarkId] {
        use BenchmarkId::*;
        &[
            F1,
            F2,
            F3,
            F4,
            F5,
            F6,
            F7,
            F8,
            F9,
            F10,
            F11,
            F12,
            F13,
            F14,
            F15,
            F16,
            F17,
            F18,
            F19,
            F20,
            F21,
            F22,
            F23,
            Sgo,
            Gp,
            Step,
            Schwefel226,
            Colville,
            Griewank,
            Himmelblau,
            Rosenbrock,
            Sphere,
            HimmelblauNlo,
            Tripod,
            RosenbrockF6,
            CompressionSpring,
            GearTrain,
            ParrottF4,
        ]
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Catalog record: dimensionality rule, default run dimension, and whether
/// the entry is noisy, constrained, or merely registered.
#[derive(Debug, Clone, Copy)]
pub struct BenchmarkEntry {
    pub id: BenchmarkId,
    pub nd_default: usize,
    pub dimension: Dimension,
    pub noisy: bool,
    pub constrained: bool,
    pub implemented: bool,
}

pub fn entry(id: BenchmarkId) -> BenchmarkEntry {
    use BenchmarkId::*;
    let (nd_default, dimension) = match id {
        F1 | F2 | F3 | F4 | F5 | F6 | F7 | F8 | F9 | F10 | F11 | F12 | F13 => {
            (30, Dimension::AnyAtLeast(2))
        }
        Schwefel226 => (30, Dimension::AnyAtLeast(2)),
        Step | Griewank | Rosenbrock | Sphere => (2, Dimension::AnyAtLeast(2)),
        F14 | F16 | F17 | F18 | Sgo | Gp | Himmelblau | Tripod => (2, Dimension::Fixed(2)),
        F19 => (3, Dimension::Fixed(3)),
        F15 | F21 | F22 | F23 | GearTrain => (4, Dimension::Fixed(4)),
        Colville => (4, Dimension::Fixed(4)),
        F20 => (6, Dimension::Fixed(6)),
        HimmelblauNlo => (5, Dimension::Fixed(5)),
        RosenbrockF6 => (10, Dimension::Fixed(10)),
        CompressionSpring => (3, Dimension::Fixed(3)),
        ParrottF4 => (1, Dimension::Fixed(1)),
    };
    BenchmarkEntry {
        id,
        nd_default,
        dimension,
        noisy: id == F7,
        constrained: matches!(id, HimmelblauNlo | CompressionSpring),
        implemented: id != ParrottF4,
    }
}

pub fn catalog() -> Vec<BenchmarkEntry> {
    BenchmarkId::all().iter().map(|&id| entry(id)).collect()
}

/// Default per-dimension bounds. For n-D families the per-dimension interval
/// is replicated to `nd`; fixed-dimension entries return their own table and
/// ignore `nd`.
pub fn default_bounds(id: BenchmarkId, nd: usize) -> Vec<(f64, f64)> {
    use BenchmarkId::*;
    match id {
        F1 | F3 | F4 | F6 => vec![(-100.0, 100.0); nd],
        F2 => vec![(-10.0, 10.0); nd],
        F5 => vec![(-30.0, 30.0); nd],
        F7 => vec![(-1.28, 1.28); nd],
        F8 | Schwefel226 => vec![(-500.0, 500.0); nd],
        F9 => vec![(-5.12, 5.12); nd],
        F10 => vec![(-32.0, 32.0); nd],
        F11 | Griewank => vec![(-600.0, 600.0); nd],
        F12 | F13 => vec![(-50.0, 50.0); nd],
        F14 => vec![(-65.536, 65.536); 2],
        F15 | F16 => vec![(-5.0, 5.0); entry(id).nd_default],
        F17 => vec![(-5.0, 10.0), (0.0, 15.0)],
        F18 => vec![(-2.0, 2.0); 2],
        F19 | F20 => vec![(0.0, 1.0); entry(id).nd_default],
        F21 | F22 | F23 => vec![(0.0, 10.0); 4],
        Sgo => vec![(-50.0, 50.0); 2],
        Gp | Tripod => vec![(-100.0, 100.0); 2],
        // the zoomed 2-D window the source runs with; other dimensions fall
        // back to the generic box
        Step => {
            if nd == 2 {
                vec![(72.0, 78.0), (27.0, 33.0)]
            } else {
                vec![(-100.0, 100.0); nd]
            }
        }
        Colville => vec![(-10.0, 10.0); 4],
        Himmelblau => vec![(-6.0, 6.0); 2],
        Rosenbrock => vec![(-2.0, 2.0); nd],
        Sphere => vec![(-100.0, 100.0); nd],
        HimmelblauNlo => vec![
            (78.0, 102.0),
            (33.0, 45.0),
            (27.0, 45.0),
            (27.0, 45.0),
            (27.0, 45.0),
        ],
        RosenbrockF6 => vec![(-100.0, 100.0); 10],
        CompressionSpring => vec![(1.0, 70.0), (0.6, 3.0), (0.207, 0.5)],
        GearTrain => vec![(12.0, 60.0); 4],
        ParrottF4 => vec![(0.0, 1.0)],
    }
}

/// Known optimum (value, location) at the entry's default dimension, where
/// the catalog source states one. Values carry full precision computed at
/// the stated locations; the noisy entry and entries whose source comments
/// are unusable carry none.
// F17's stated location is the rounded catalog coordinate, not a pi stand-in
#[allow(clippy::approx_constant)]
pub fn known_optimum(id: BenchmarkId) -> Option<(f64, Vec<f64>)> {
    use BenchmarkId::*;
    let origin30 = vec![0.0; 30];
    Some(match id {
        F1 | F2 | F3 | F4 | F6 | F9 | F10 => (0.0, origin30),
        F5 | F13 => (0.0, vec![1.0; 30]),
        F11 => (0.0, vec![100.0; 30]),
        F12 => (0.0, vec![-1.0; 30]),
        F8 | Schwefel226 => (12569.44872948406, vec![420.8687; 30]),
        F15 => (
            -0.00030749524951270495,
            vec![0.1928, 0.1908, 0.1231, 0.1358],
        ),
        F17 => (-0.397889112761383, vec![-3.142, 12.275]),
        F18 => (-3.0, vec![0.0, -1.0]),
        F19 => (3.8627475058548155, vec![0.114, 0.556, 0.852]),
        F20 => (
            3.321844904252486,
            vec![0.201, 0.150, 0.477, 0.275, 0.311, 0.657],
        ),
        F21 => (10.153195850979039, vec![4.0; 4]),
        F22 => (10.402818836930305, vec![4.0; 4]),
        F23 => (10.536283726219603, vec![4.0; 4]),
        Gp => (-3.0, vec![20.0, -11.0]),
        Step => (0.0, vec![75.0, 35.0]),
        Colville => (0.0, vec![1.0; 4]),
        Griewank => (0.0, vec![75.123; 2]),
        Himmelblau => (200.0, vec![3.0, 2.0]),
        Rosenbrock => (0.0, vec![1.0; 2]),
        Sphere => (0.0, vec![0.0; 2]),
        HimmelblauNlo => (
            31025.556264491348,
            vec![78.0, 33.0, 27.0709971052, 45.0, 44.9692425501],
        ),
        Tripod => (0.0, vec![0.0, -50.0]),
        F7 | F14 | F16 | Sgo | RosenbrockF6 | CompressionSpring | GearTrain | ParrottF4 => {
            return None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_through_strings() {
        for &id in BenchmarkId::all() {
            assert_eq!(BenchmarkId::parse(id.as_str()), Some(id));
        }
        assert_eq!(
            BenchmarkId::parse("schwefel_226"),
            Some(BenchmarkId::Schwefel226)
        );
        assert_eq!(BenchmarkId::parse("nope"), None);
    }

    #[test]
    fn family_bounds_replicate_to_requested_dimension() {
        assert_eq!(default_bounds(BenchmarkId::F10, 4), vec![(-32.0, 32.0); 4]);
        assert_eq!(
            default_bounds(BenchmarkId::CompressionSpring, 3),
            vec![(1.0, 70.0), (0.6, 3.0), (0.207, 0.5)]
        );
        assert_eq!(
            default_bounds(BenchmarkId::F17, 2),
            vec![(-5.0, 10.0), (0.0, 15.0)]
        );
    }

    #[test]
    fn known_optima_locations_have_default_dimension() {
        for &id in BenchmarkId::all() {
            if let Some((_, loc)) = known_optimum(id) {
                assert_eq!(loc.len(), entry(id).nd_default, "{id}");
            }
        }
    }

    #[test]
    fn only_parrott_is_unimplemented() {
        let unimplemented: Vec<_> = catalog()
            .into_iter()
            .filter(|e| !e.implemented)
            .map(|e| e.id)
            .collect();
        assert_eq!(unimplemented, vec![BenchmarkId::ParrottF4]);
    }
}
