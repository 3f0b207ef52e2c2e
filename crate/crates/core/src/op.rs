use core::fmt;

/// The four biquandle operations.
///
/// `Up` and `Down` are the defining operations; `BarUp` and `BarDown` come
/// from inverting the switch `S(x, y) = (y ↓ x, x ↑ y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Up,
    Down,
    BarUp,
    BarDown,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Up, Op::Down, Op::BarUp, Op::BarDown];

    /// The infix token used by the term grammar.
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Up => "^",
            Op::Down => "_",
            Op::BarUp => "^-",
            Op::BarDown => "_-",
        }
    }

    /// True for `Up` and `BarUp`.
    pub fn is_up_type(self) -> bool {
        matches!(self, Op::Up | Op::BarUp)
    }

    pub fn is_barred(self) -> bool {
        matches!(self, Op::BarUp | Op::BarDown)
    }

    /// Up-type or down-type operation with the given exponent.
    pub fn from_parts(up_type: bool, sign: Sign) -> Op {
        match (up_type, sign) {
            (true, Sign::Pos) => Op::Up,
            (true, Sign::Neg) => Op::BarUp,
            (false, Sign::Pos) => Op::Down,
            (false, Sign::Neg) => Op::BarDown,
        }
    }

    /// `Pos` for the plain operations, `Neg` for the barred ones.
    pub fn sign(self) -> Sign {
        if self.is_barred() {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A sign `±1`: crossing signs and free-group exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Pos),
            '-' => Some(Sign::Neg),
            _ => None,
        }
    }
}
