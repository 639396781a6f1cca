use crate::monopole::{
    height_to_segment, DesignError, MonopoleSpec, MultiLoadDesign, SingleLoadDesign, H_LOAD_MAX_M,
    H_LOAD_MIN_M, R_LOAD_MAX_OHMS, R_LOAD_MIN_OHMS,
};

/// Linear frequency sweep for the FR card. Default: 26 points, 5 to 30 MHz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencySweep {
    pub count: usize,
    pub start_mhz: f64,
    pub step_mhz: f64,
}

impl Default for FrequencySweep {
    fn default() -> Self {
        Self {
            count: 26,
            start_mhz: 5.0,
            step_mhz: 1.0,
        }
    }
}

impl FrequencySweep {
    pub fn freqs_mhz(&self) -> Vec<f64> {
        (0..self.count)
            .map(|i| self.start_mhz + i as f64 * self.step_mhz)
            .collect()
    }
}

/// Card-field number format: at most six fractional digits, trailing zeros
/// trimmed down to a bare decimal point, and the leading zero of a pure
/// fraction dropped ("0.005" prints as ".005", "10.7" stays, "0" prints
/// as "0.").
pub fn nec_num(x: f64) -> String {
    let mut s = format!("{:.6}", x);
    while s.ends_with('0') {
        s.pop();
    }
    if s.starts_with("0.") && s.len() > 2 {
        s.remove(0);
    } else if s.starts_with("-0.") && s.len() > 3 {
        s.remove(1);
    }
    s
}

fn check_single(design: &SingleLoadDesign) -> Result<(), DesignError> {
    if !(R_LOAD_MIN_OHMS..=R_LOAD_MAX_OHMS).contains(&design.r_ohms) {
        return Err(DesignError::ResistanceOutOfRange(design.r_ohms));
    }
    if !(H_LOAD_MIN_M..=H_LOAD_MAX_M).contains(&design.h_m) {
        return Err(DesignError::HeightOutOfRange(design.h_m));
    }
    Ok(())
}

fn tail_cards(sweep: &FrequencySweep, out: &mut Vec<String>) {
    out.push("GN1".into());
    out.push(format!(
        "FR 0,{},0,0,{},{}",
        sweep.count,
        nec_num(sweep.start_mhz),
        nec_num(sweep.step_mhz)
    ));
    out.push("EX 0,1,1,1,1.,0.".into());
    // ten polar-angle samples, 0..90 deg by 10, with average-power-gain
    // accounting requested (pattern code 1001)
    out.push("RP 0,10,1,1001,0.,0.,10.,0.,100000.".into());
    out.push("EN".into());
}

fn gw_card(spec: &MonopoleSpec) -> String {
    format!(
        "GW1,{},0.,0.,0.,0.,0.,{},{}",
        spec.n_segments,
        nec_num(spec.height_m),
        nec_num(spec.radius_m)
    )
}

/// Input deck for the single-resistor monopole. Deterministic in its inputs;
/// the non-comment card lines are the pipeline's wire format.
pub fn generate_single_load_deck(
    design: &SingleLoadDesign,
    spec: &MonopoleSpec,
    sweep: &FrequencySweep,
    z0: f64,
) -> Result<String, DesignError> {
    check_single(design)?;
    let segment = height_to_segment(design.h_m, spec)?;
    let r = nec_num(design.r_ohms);
    let mut lines = vec![
        "CM File: LD_MONO.NEC".to_string(),
        "CM Single-resistor loaded monopole".to_string(),
        format!("CM R={} ohms, Z={} m", r, nec_num(design.h_m)),
        format!("CM seg # = INT(0.5+Z/SegLen) = {segment}"),
        format!("CM Zo={z0} ohms"),
        "CE".to_string(),
        gw_card(spec),
        "GE1".to_string(),
        format!("LD0,1,{segment},{segment},{r},0.,0."),
    ];
    tail_cards(sweep, &mut lines);
    Ok(lines.join("\n") + "\n")
}

/// Input deck for the monopole with one resistor at the center of every
/// segment. The load count must match the wire's segment count.
pub fn generate_multi_load_deck(
    design: &MultiLoadDesign,
    spec: &MonopoleSpec,
    sweep: &FrequencySweep,
    z0: f64,
) -> Result<String, DesignError> {
    if design.loads_ohms.len() != spec.n_segments {
        return Err(DesignError::WrongLoadCount {
            expected: spec.n_segments,
            got: design.loads_ohms.len(),
        });
    }
    if let Some(&bad) = design.loads_ohms.iter().find(|&&r| r < 0.0) {
        return Err(DesignError::NegativeLoad(bad));
    }
    let mut lines = vec![
        "CM File: LD_MONO.NEC".to_string(),
        format!("CM {}-segment resistively loaded monopole", spec.n_segments),
        format!("CM Zo={z0} ohms"),
        "CE".to_string(),
        gw_card(spec),
        "GE1".to_string(),
    ];
    for (i, &r) in design.loads_ohms.iter().enumerate() {
        let seg = i + 1;
        lines.push(format!("LD0,1,{seg},{seg},{},0.,0.", nec_num(r)));
    }
    tail_cards(sweep, &mut lines);
    Ok(lines.join("\n") + "\n")
}
