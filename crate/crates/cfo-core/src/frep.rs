/// Repositioning-factor schedule. The factor starts at 0.5, climbs by 0.1
/// each step, and wraps to 0.05 once it passes 1. Arithmetic runs over exact
/// integer hundredths so the "> 1" wrap never drifts: repeated 0.1 addition
/// in binary floats crosses 1.0 a step early.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrepSchedule {
    hundredths: i32,
    delta_hundredths: i32,
    min_hundredths: i32,
}

impl FrepSchedule {
    pub fn new(init: f64, delta: f64, min: f64) -> Self {
        Self {
            hundredths: to_hundredths(init),
            delta_hundredths: to_hundredths(delta),
            min_hundredths: to_hundredths(min),
        }
    }

    /// The standard 0.5 / +0.1 / wrap-to-0.05 schedule.
    pub fn standard() -> Self {
        Self::new(0.5, 0.1, 0.05)
    }

    pub fn value(&self) -> f64 {
        f64::from(self.hundredths) / 100.0
    }

    pub fn advance(&mut self) {
        self.hundredths += self.delta_hundredths;
        if self.hundredths > 100 {
            self.hundredths = self.min_hundredths;
        }
    }
}

fn to_hundredths(x: f64) -> i32 {
    (x * 100.0).round() as i32
}

/// One step of the standard schedule applied to a plain value: add 0.1, wrap
/// past 1 to 0.05.
pub fn frep_next(frep: f64) -> f64 {
    let mut s = FrepSchedule::new(frep, 0.1, 0.05);
    s.advance();
    s.value()
}
