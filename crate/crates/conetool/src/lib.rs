//! Support library for the `conetool` binary: deterministic random
//! generators for algebra elements, frames, and boundary parameters, the
//! property suites behind `conetool verify`, and the JSON report types.

pub mod gen;
pub mod report;
pub mod suites;
