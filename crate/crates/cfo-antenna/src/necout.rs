use std::fmt;

use crate::response::FrequencyResponse;

/// Structured parse failure: which frequency block (1-based, when one was
/// open) and which line of the report text.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub block: Option<usize>,
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(block: Option<usize>, line: usize, message: impl Into<String>) -> Self {
        Self {
            block,
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.block {
            Some(b) => write!(
                f,
                "frequency block {b}, line {}: {}",
                self.line, self.message
            ),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

impl std::error::Error for ParseError {}

// 0-based byte ranges of the fixed-column fields this pipeline reads.
// Pattern rows: theta in 1..=8, total power gain (dB) in columns 37..=44.
const PATTERN_THETA: std::ops::Range<usize> = 0..8;
const PATTERN_TOTAL_GAIN: std::ops::Range<usize> = 36..44;
// Input-parameters row: tag 1..=5, seg 6..=11, then nine 13-wide fields;
// impedance occupies fields five and six.
const IMPEDANCE_REAL: std::ops::Range<usize> = 63..76;
const IMPEDANCE_IMAG: std::ops::Range<usize> = 76..89;

#[derive(Default)]
struct Block {
    freq_mhz: f64,
    rin: Option<f64>,
    xin: Option<f64>,
    gmax: Option<f64>,
    avg_power_gain: Option<f64>,
}

enum Section {
    None,
    InputParameters,
    Patterns,
}

fn field(line: &str, range: std::ops::Range<usize>) -> Option<&str> {
    line.get(range).map(str::trim)
}

fn parse_field(
    line_text: &str,
    range: std::ops::Range<usize>,
    what: &str,
    block: usize,
    line_no: usize,
) -> Result<f64, ParseError> {
    field(line_text, range)
        .and_then(|s| s.parse::<f64>().ok())
        .ok_or_else(|| ParseError::new(Some(block), line_no, format!("cannot read {what}")))
}

/// Parse a field-solver text report produced for the standard request: a
/// frequency sweep with, per frequency, the antenna-input-parameters section,
/// the ten-sample polar radiation pattern, and the average-power-gain line.
///
/// Per block this extracts the input impedance (fixed columns of the first
/// data row after the input-parameters heading), the maximum total power
/// gain over the pattern rows (columns 37-44), and the radiation efficiency,
/// derived as 100 * average_power_gain / 2 since the pattern covers the
/// hemisphere above a perfect ground. The SWR column is computed against z0.
pub fn parse_nec_output(text: &str, z0: f64) -> Result<FrequencyResponse, ParseError> {
    let mut freqs = Vec::new();
    let mut eff = Vec::new();
    let mut gmax = Vec::new();
    let mut rin = Vec::new();
    let mut xin = Vec::new();

    let mut current: Option<Block> = None;
    let mut section = Section::None;
    let mut block_start_line = 0usize;

    let finish = |blk: Block,
                  block_no: usize,
                  line_no: usize|
     -> Result<(f64, f64, f64, f64, f64), ParseError> {
        let r = blk.rin.ok_or_else(|| {
            ParseError::new(Some(block_no), line_no, "missing antenna input parameters")
        })?;
        let x = blk.xin.unwrap_or(0.0);
        let g = blk.gmax.ok_or_else(|| {
            ParseError::new(Some(block_no), line_no, "missing radiation pattern rows")
        })?;
        let apg = blk.avg_power_gain.ok_or_else(|| {
            ParseError::new(Some(block_no), line_no, "missing average power gain")
        })?;
        Ok((blk.freq_mhz, 100.0 * apg / 2.0, g, r, x))
    };

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if let Some(pos) = line.find("FREQUENCY=") {
            if let Some(blk) = current.take() {
                let (f, e, g, r, x) = finish(blk, freqs.len() + 1, block_start_line)?;
                freqs.push(f);
                eff.push(e);
                gmax.push(g);
                rin.push(r);
                xin.push(x);
            }
            let rest = &line[pos + "FREQUENCY=".len()..];
            let token = rest.split_whitespace().next().ok_or_else(|| {
                ParseError::new(Some(freqs.len() + 1), line_no, "missing frequency value")
            })?;
            let freq_mhz = token.parse::<f64>().map_err(|_| {
                ParseError::new(
                    Some(freqs.len() + 1),
                    line_no,
                    format!("bad frequency value {token:?}"),
                )
            })?;
            current = Some(Block {
                freq_mhz,
                ..Block::default()
            });
            section = Section::None;
            block_start_line = line_no;
            continue;
        }

        let Some(blk) = current.as_mut() else {
            continue;
        };
        let block_no = freqs.len() + 1;

        if line.contains("ANTENNA INPUT PARAMETERS") {
            section = Section::InputParameters;
            continue;
        }
        if line.contains("RADIATION PATTERNS") {
            section = Section::Patterns;
            continue;
        }
        if let Some(pos) = line.find("AVERAGE POWER GAIN=") {
            let rest = &line[pos + "AVERAGE POWER GAIN=".len()..];
            let token = rest.split_whitespace().next().ok_or_else(|| {
                ParseError::new(Some(block_no), line_no, "missing average power gain value")
            })?;
            blk.avg_power_gain = Some(token.parse::<f64>().map_err(|_| {
                ParseError::new(
                    Some(block_no),
                    line_no,
                    format!("bad average power gain {token:?}"),
                )
            })?);
            section = Section::None;
            continue;
        }

        match section {
            Section::InputParameters if blk.rin.is_none() => {
                let mut tokens = line.split_whitespace();
                let is_data_row = tokens
                    .next()
                    .map(|t| t.chars().all(|c| c.is_ascii_digit()) && !t.is_empty())
                    .unwrap_or(false);
                if is_data_row {
                    blk.rin = Some(parse_field(
                        line,
                        IMPEDANCE_REAL,
                        "impedance real part",
                        block_no,
                        line_no,
                    )?);
                    blk.xin = Some(parse_field(
                        line,
                        IMPEDANCE_IMAG,
                        "impedance imaginary part",
                        block_no,
                        line_no,
                    )?);
                }
            }
            Section::Patterns => {
                let theta_ok = field(line, PATTERN_THETA)
                    .map(|s| s.parse::<f64>().is_ok())
                    .unwrap_or(false);
                if theta_ok && line.len() >= PATTERN_TOTAL_GAIN.end {
                    let g = parse_field(
                        line,
                        PATTERN_TOTAL_GAIN,
                        "total power gain",
                        block_no,
                        line_no,
                    )?;
                    blk.gmax = Some(match blk.gmax {
                        Some(prev) => prev.max(g),
                        None => g,
                    });
                }
            }
            _ => {}
        }
    }

    let total_lines = text.lines().count();
    if let Some(blk) = current.take() {
        let (f, e, g, r, x) = finish(blk, freqs.len() + 1, block_start_line)?;
        freqs.push(f);
        eff.push(e);
        gmax.push(g);
        rin.push(r);
        xin.push(x);
    }
    if freqs.is_empty() {
        return Err(ParseError::new(
            None,
            total_lines.max(1),
            "no frequency blocks found",
        ));
    }
    Ok(FrequencyResponse::from_parts(
        freqs, eff, gmax, rin, xin, z0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gain_row_columns_37_to_44() {
        let row = "   90.00     0.00      3.91  -999.99    3.91  0.00000   0.00 LINEAR  1.29504E-04    5.37  0.00000E+00   -5.24";
        assert_eq!(&row[36..44], "    3.91");
        let text = format!(
            "FREQUENCY=  5.0000E+00 MHZ\n\
             ANTENNA INPUT PARAMETERS\n\
             {:>5}{:>6}{:>13}{:>13}{:>13}{:>13}{:>13}{:>13}\n\
             RADIATION PATTERNS\n\
             {row}\n\
             AVERAGE POWER GAIN= 1.60000E+00\n",
            1,
            1,
            "1.00000E+00",
            "0.00000E+00",
            "1.87860E-03",
            "-9.61437E-04",
            "4.22095E+02",
            "2.16023E+02",
        );
        let resp = parse_nec_output(&text, 50.0).unwrap();
        assert_eq!(resp.gmax_dbi, vec![3.91]);
        assert_eq!(resp.rin_ohms, vec![422.095]);
        assert_eq!(resp.xin_ohms, vec![216.023]);
        assert_eq!(resp.efficiency_pct, vec![80.0]);
    }

    #[test]
    fn empty_text_is_an_error() {
        let err = parse_nec_output("", 50.0).unwrap_err();
        assert!(err.message.contains("no frequency blocks"));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(256))]

            // arbitrary junk, including multibyte text and stray section
            // markers, must come back as a structured error or a response,
            // never a panic
            #[test]
            fn parser_never_panics_on_arbitrary_text(text in ".{0,400}") {
                let _ = parse_nec_output(&text, 50.0);
            }

            #[test]
            fn parser_never_panics_on_marker_salad(
                pieces in proptest::collection::vec(
                    prop_oneof![
                        Just("FREQUENCY= 5.0 MHZ".to_string()),
                        Just("FREQUENCY= garbage".to_string()),
                        Just("ANTENNA INPUT PARAMETERS".to_string()),
                        Just("RADIATION PATTERNS".to_string()),
                        Just("AVERAGE POWER GAIN= 1.6".to_string()),
                        Just("AVERAGE POWER GAIN=".to_string()),
                        Just("    1     1  short row".to_string()),
                        Just("   90.00 not-enough-columns".to_string()),
                        ".{0,60}",
                    ],
                    0..12,
                ),
            ) {
                let _ = parse_nec_output(&pieces.join("\n"), 50.0);
            }
        }
    }

    #[test]
    fn truncated_block_names_the_block() {
        let text = "FREQUENCY=  5.0000E+00 MHZ\nANTENNA INPUT PARAMETERS\n";
        let err = parse_nec_output(text, 50.0).unwrap_err();
        assert_eq!(err.block, Some(1));
        assert!(err.message.contains("missing antenna input parameters"));
    }
}
