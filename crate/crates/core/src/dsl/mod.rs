//! Text formats: ring specifications, element literals, fuzzy ideals and
//! JSON reports.

mod error;
mod format;
mod parser;
mod report;

pub use error::{ParseError, SourceSpan};
pub use format::{format_fuzzy, format_ideal, format_ring_spec};
pub use parser::{
    parse_element, parse_element_literal, parse_fuzzy_spec, parse_fuzzy_syntax, parse_ideal_spec, parse_ring_spec,
    parse_value, parse_value_list, FuzzySpec,
};
pub use report::{classification_json, diagram_json, radical_json, to_json_string, witness_from_json, witness_json};
