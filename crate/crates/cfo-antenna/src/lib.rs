//! Loaded-monopole objective pipeline: a candidate design becomes a
//! card-formatted solver input deck, a simulator backend (external executable
//! or canned lookup) turns the deck into a frequency response, and the
//! response feeds one of three impedance-bandwidth fitness functions. Deck
//! generation, parsing and the fitness formulas are pure; backends are
//! required to be deterministic so the whole pipeline replays bit-identically.

mod backend;
mod deck;
mod gridscan;
mod monopole;
mod necout;
mod objectives;
mod response;
mod vswr;

pub use backend::{
    deck_digest, BackendError, ExternalNecBackend, SimulatorBackend, StubBackend, StubResponse,
};
pub use deck::{generate_multi_load_deck, generate_single_load_deck, nec_num, FrequencySweep};
pub use gridscan::{grid_scan, GridScan};
pub use monopole::{
    height_to_segment, DesignError, MonopoleSpec, MultiLoadDesign, SingleLoadDesign, H_LOAD_MAX_M,
    H_LOAD_MIN_M, R_LOAD_MAX_OHMS, R_LOAD_MIN_OHMS,
};
pub use necout::{parse_nec_output, ParseError};
pub use objectives::{
    evaluate_design, f1, f2, f3, z0_sweep, FitnessEval, MonopoleFitness, MonopoleObjective,
    Z0Sweep, OBJECTIVE_CAP,
};
pub use response::FrequencyResponse;
pub use vswr::{vswr, vswr_checked, VSWR_CAP};
