/// Deterministic uniform [0,1) noise for the quartic-noise function.
///
/// The draw is a pure function of (seed, position): the coordinate bit
/// patterns are folded into a 64-bit state and finished with the splitmix64
/// mixer. Equal (seed, x) always produce the same value, which is what keeps
/// a noisy objective inside the toolkit's replay guarantees; the seed is part
/// of the objective's identity.
pub fn uniform_noise(seed: u64, x: &[f64]) -> f64 {
    let mut state = seed ^ 0x5bf0_3635_16f5_2e5d;
    for &v in x {
        state = mix(state ^ v.to_bits());
    }
    (mix(state) >> 11) as f64 / (1u64 << 53) as f64
}

fn mix(z: u64) -> u64 {
    let mut z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
