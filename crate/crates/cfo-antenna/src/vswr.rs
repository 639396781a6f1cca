/// Reported in place of an infinite standing-wave ratio (total reflection,
/// or the degenerate Z = -Z0 case).
pub const VSWR_CAP: f64 = 1e9;

/// Standing-wave ratio of Z = rin + j*xin against a purely resistive feed
/// impedance z0, via the reflection coefficient:
/// |gamma| = |Z - Z0| / |Z + Z0|, SWR = (1 + |gamma|)/(1 - |gamma|).
/// Returns the value and whether it was capped.
pub fn vswr_checked(rin: f64, xin: f64, z0: f64) -> (f64, bool) {
    debug_assert!(z0 > 0.0);
    let num = ((rin - z0) * (rin - z0) + xin * xin).sqrt();
    let den = ((rin + z0) * (rin + z0) + xin * xin).sqrt();
    // (1 + num/den) / (1 - num/den), rearranged so purely resistive loads
    // come out exact
    if num >= den {
        return (VSWR_CAP, true);
    }
    let swr = (den + num) / (den - num);
    if swr > VSWR_CAP {
        (VSWR_CAP, true)
    } else {
        (swr, false)
    }
}

/// Capped standing-wave ratio; always >= 1.
pub fn vswr(rin: f64, xin: f64, z0: f64) -> f64 {
    vswr_checked(rin, xin, z0).0
}
