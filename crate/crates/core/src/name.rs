use core::fmt;

use alloc::string::String;

/// Generator and semiarc names: one or more lowercase ASCII letters or digits.
pub fn is_valid_name(s: &str) -> bool {
    !s.is_empty()
        && s
            .bytes()
            .all(|b| b.is_ascii_lowercase() || b.is_ascii_digit())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NameError(pub String);

impl fmt::Display for NameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid name {:?}", self.0)
    }
}

impl core::error::Error for NameError {}
