use cindex_core::queries::Range;
use cindex_core::text::{parse_poly, parse_rat};
use cindex_core::{Error, Poly, Rat};
use std::cell::Cell;
use std::io::Read;

/// Why a command stopped, mapped onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input or usage: exit 1.
    Usage(String),
    /// A mathematical precondition does not hold: exit 2.
    Precondition(String),
    /// Engines disagreed; the details were already printed: exit 3.
    Disagreement,
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Disagreement => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Failure::Usage(m) | Failure::Precondition(m) => Some(m),
            Failure::Disagreement => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

pub type CmdResult<T = ()> = Result<T, Failure>;

/// Reads `-` from stdin at most once per process.
pub struct Inputs {
    stdin_used: Cell<bool>,
}

impl Inputs {
    pub fn new() -> Self {
        Inputs {
            stdin_used: Cell::new(false),
        }
    }

    pub fn text(&self, arg: &str) -> CmdResult<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used.replace(true) {
            return Err(Failure::Usage(
                "only one argument may be read from stdin".into(),
            ));
        }
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(buf.trim().to_string())
    }

    pub fn poly(&self, what: &str, arg: &str) -> CmdResult<Poly> {
        let text = self.text(arg)?;
        parse_poly(&text).map_err(|e| Failure::Usage(format!("{what}: {e}")))
    }
}

enum Endpoint {
    NegInf,
    PosInf,
    Finite(Rat),
}

fn endpoint(what: &str, s: &str) -> CmdResult<Endpoint> {
    match s.trim() {
        "-inf" => Ok(Endpoint::NegInf),
        "+inf" | "inf" => Ok(Endpoint::PosInf),
        t => parse_rat(t)
            .map(Endpoint::Finite)
            .map_err(|e| Failure::Usage(format!("{what}: {e}"))),
    }
}

/// Either two rationals or exactly `-inf` / `+inf`; half-lines are rejected.
pub fn range(from: &str, to: &str) -> CmdResult<Range> {
    match (endpoint("--from", from)?, endpoint("--to", to)?) {
        (Endpoint::Finite(a), Endpoint::Finite(b)) => Ok(Range::Interval(a, b)),
        (Endpoint::NegInf, Endpoint::PosInf) => Ok(Range::RealLine),
        _ => Err(Failure::Precondition(
            "infinite endpoints must be the pair -inf, +inf; half-lines are not supported".into(),
        )),
    }
}

pub fn optional_range(from: Option<&str>, to: Option<&str>) -> CmdResult<Range> {
    match (from, to) {
        (Some(a), Some(b)) => range(a, b),
        (None, None) => Ok(Range::RealLine),
        _ => Err(Failure::Usage(
            "--from and --to must be given together".into(),
        )),
    }
}
