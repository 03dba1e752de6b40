//! Tarski queries and real-root counts.
//!
//! `TaQ(Q, P) = Ind(P'Q / P)` and the number of distinct real roots of `P`
//! is `TaQ(1, P) = Ind(P'/P)`. Both are multiplicity-blind.

use crate::cauchy::{index_real_line, index_subres, reduce_num};
use crate::error::{Error, Result};
use crate::number::{HalfInt, Rat};
use crate::poly::Poly;
use crate::sequences::subresultant_chain;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Range {
    Interval(Rat, Rat),
    RealLine,
}

/// Result of a Tarski query.
///
/// When an endpoint of an interval is a root of `P` the index picks up a
/// half contribution there; `boundary` is set and the raw index is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TarskiResult {
    pub index: HalfInt,
    pub boundary: bool,
}

impl TarskiResult {
    /// The integer count, absent when an endpoint lies on a root.
    pub fn value(&self) -> Option<i64> {
        if self.boundary {
            None
        } else {
            self.index.to_integer()
        }
    }
}

/// Number of distinct real roots, with the same boundary convention.
pub type RootCount = TarskiResult;

fn require_nonconstant(p: &Poly) -> Result<()> {
    match p.degree() {
        Some(d) if d >= 1 => Ok(()),
        d => Err(Error::degree(d, None)),
    }
}

fn index_over(num: &Poly, p: &Poly, range: &Range) -> Result<TarskiResult> {
    let (index, boundary) = match range {
        Range::Interval(a, b) => {
            let index = index_subres(num, p, a, b)?;
            (index, p.eval(a).is_zero() || p.eval(b).is_zero())
        }
        Range::RealLine => (index_real_line(num, p)?, false),
    };
    debug_assert!(boundary || index.is_integer());
    Ok(TarskiResult { index, boundary })
}

/// `#{x : P(x) = 0, Q(x) > 0} - #{x : P(x) = 0, Q(x) < 0}` over the range.
pub fn tarski_query(q: &Poly, p: &Poly, range: &Range) -> Result<TarskiResult> {
    require_nonconstant(p)?;
    let num = reduce_num(&(&p.derivative() * q), p)?;
    index_over(&num, p, range)
}

pub fn count_real_roots(p: &Poly, range: &Range) -> Result<RootCount> {
    require_nonconstant(p)?;
    index_over(&p.derivative(), p, range)
}

/// `P / gcd(P, P')`, rescaled to keep the leading coefficient of `P`.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    require_nonconstant(p)?;
    let chain = subresultant_chain(p, &p.derivative())?;
    let gcd = chain.t_poly(chain.s());
    let (quot, rem) = p.euclid_div(gcd)?;
    debug_assert!(rem.is_zero());
    let lc = p.lc().expect("nonzero") / quot.lc().expect("nonzero");
    Ok(quot.scale(&lc))
}
