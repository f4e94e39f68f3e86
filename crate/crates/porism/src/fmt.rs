//! Deterministic number formatting for the text interfaces.

/// Formats a double with 17 significant digits in scientific notation.
/// The output is a valid JSON number and round-trips bit-exactly.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}
