//! Local and interval Cauchy indices.
//!
//! Every interval engine first replaces `Q` by `Rem(Q, P)`, which leaves the
//! index unchanged and puts the pair in the `deg Q < deg P` setting the
//! formulas need. `Q = 0` and constant `P` give index 0 before any formula is
//! consulted.

use crate::error::{Error, Result};
use crate::number::{HalfInt, Rat, Sign};
use crate::poly::Poly;
use crate::sequences::{sturm_sequence, subresultant_chain};
use num_traits::Zero;
use std::collections::BTreeSet;

/// `sign(Q/P, x)`: the sign of the continuous extension of `Q/P` at `x`,
/// or zero at a zero or pole.
pub type ExtSign = Sign;

pub fn ext_sign(q: &Poly, p: &Poly, x: &Rat) -> Result<ExtSign> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.is_zero() {
        return Ok(Sign::Zero);
    }
    let (pv, qv) = (p.sign_at(x), q.sign_at(x));
    match (pv.is_zero(), qv.is_zero()) {
        (false, false) => Ok(pv * qv),
        (true, false) | (false, true) => Ok(Sign::Zero),
        (true, true) => {
            let (mp, pt) = p.strip_root(x)?;
            let (mq, qt) = q.strip_root(x)?;
            Ok(if mp == mq {
                pt.sign_at(x) * qt.sign_at(x)
            } else {
                Sign::Zero
            })
        }
    }
}

/// `Ind_x^+`, `Ind_x^-` and `Ind_x = Ind_x^+ - Ind_x^-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalIndex {
    pub plus: HalfInt,
    pub minus: HalfInt,
    pub total: HalfInt,
}

impl LocalIndex {
    pub const ZERO: LocalIndex = LocalIndex {
        plus: HalfInt::ZERO,
        minus: HalfInt::ZERO,
        total: HalfInt::ZERO,
    };
}

/// Writes `Q/P = (X - x)^m · Q̃/P̃` and reads off the one-sided half jumps.
pub fn local_index(q: &Poly, p: &Poly, x: &Rat) -> Result<LocalIndex> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q.is_zero() {
        return Ok(LocalIndex::ZERO);
    }
    let (mp, pt) = p.strip_root(x)?;
    let (mq, qt) = q.strip_root(x)?;
    let m = i64::from(mq) - i64::from(mp);
    if m >= 0 {
        return Ok(LocalIndex::ZERO);
    }
    let s = qt.sign_at(x) * pt.sign_at(x);
    let plus = HalfInt::HALF * s;
    let minus = if m % 2 == 0 { plus } else { -plus };
    Ok(LocalIndex {
        plus,
        minus,
        total: plus - minus,
    })
}

/// `Var_x(P, Q) = ½ |sign P(x) - sign Q(x)|`, one of `0`, `½`, `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct VarCount(pub HalfInt);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infinity {
    Neg,
    Pos,
}

fn var_of_signs(sp: Sign, sq: Sign) -> VarCount {
    VarCount(HalfInt::from_doubled((sp.to_i64() - sq.to_i64()).abs()))
}

pub fn var_at(p: &Poly, q: &Poly, x: &Rat) -> VarCount {
    var_of_signs(p.sign_at(x), q.sign_at(x))
}

/// `Var_a^b(P, Q) = Var_a(P, Q) - Var_b(P, Q)`
pub fn var_between(p: &Poly, q: &Poly, a: &Rat, b: &Rat) -> HalfInt {
    var_at(p, q, a).0 - var_at(p, q, b).0
}

fn sign_at_infinity(p: &Poly, at: Infinity) -> Sign {
    let s = p.lc_sign();
    match (at, p.degree()) {
        (Infinity::Neg, Some(d)) if d % 2 == 1 => -s,
        _ => s,
    }
}

/// Sign variation at `±∞`, read off the leading coefficients and degrees.
pub fn var_at_infinity(p: &Poly, q: &Poly, at: Infinity) -> VarCount {
    var_of_signs(sign_at_infinity(p, at), sign_at_infinity(q, at))
}

fn check_interval(a: &Rat, b: &Rat) -> Result<()> {
    if a < b {
        Ok(())
    } else {
        Err(Error::EmptyInterval {
            a: Box::new(a.clone()),
            b: Box::new(b.clone()),
        })
    }
}

/// `Ind_a^+ + Σ_{x ∈ (a,b)} Ind_x - Ind_b^-`, summed over a caller-supplied
/// list of all roots of `P` in `[a, b]`.
///
/// Uses nothing but exact division and evaluation, so it serves as ground
/// truth for the formula engines.
pub fn index_interval_oracle(
    q: &Poly,
    p: &Poly,
    roots: &[(Rat, u32)],
    a: &Rat,
    b: &Rat,
) -> Result<HalfInt> {
    check_interval(a, b)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut points = BTreeSet::new();
    for (r, _) in roots {
        if !p.eval(r).is_zero() {
            return Err(Error::NotARoot(r.clone()));
        }
        if a <= r && r <= b {
            points.insert(r);
        }
    }
    let mut total = HalfInt::ZERO;
    for x in points {
        let local = local_index(q, p, x)?;
        total += if x == a {
            local.plus
        } else if x == b {
            -local.minus
        } else {
            local.total
        };
    }
    Ok(total)
}

/// `Ind_ℝ(Q/P) = Σ_x Ind_x(Q/P)` over a caller-supplied list of all real roots of `P`.
pub fn index_real_line_oracle(q: &Poly, p: &Poly, roots: &[(Rat, u32)]) -> Result<HalfInt> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut points = BTreeSet::new();
    for (r, _) in roots {
        if !p.eval(r).is_zero() {
            return Err(Error::NotARoot(r.clone()));
        }
        points.insert(r);
    }
    points
        .into_iter()
        .map(|x| local_index(q, p, x).map(|l| l.total))
        .sum()
}

/// `Rem(Q, P)`; the Cauchy index of `Q/P` on any interval equals that of `Rem(Q, P)/P`.
pub fn reduce_num(q: &Poly, p: &Poly) -> Result<Poly> {
    q.rem(p).map_err(|_| Error::ZeroPolynomial)
}

/// Reduced numerator, or `None` when the index is trivially zero.
fn reduced(q: &Poly, p: &Poly) -> Result<Option<Poly>> {
    let r = reduce_num(q, p)?;
    Ok((!r.is_zero() && p.degree() >= Some(1)).then_some(r))
}

fn ext_sign_jump(num: &Poly, den: &Poly, a: &Rat, b: &Rat) -> Result<i64> {
    Ok(ext_sign(num, den, b)?.to_i64() - ext_sign(num, den, a)?.to_i64())
}

/// `½ Σ (sign(S_{i+1}/S_i, b) - sign(S_{i+1}/S_i, a))` over the Sturm sequence.
pub fn index_sturm(q: &Poly, p: &Poly, a: &Rat, b: &Rat) -> Result<HalfInt> {
    check_interval(a, b)?;
    let Some(r) = reduced(q, p)? else {
        return Ok(HalfInt::ZERO);
    };
    let seq = sturm_sequence(p, &r)?;
    let doubled = seq
        .polys()
        .windows(2)
        .map(|w| ext_sign_jump(&w[1], &w[0], a, b))
        .sum::<Result<i64>>()?;
    Ok(HalfInt::from_doubled(doubled))
}

/// The subresultant form: the Sturm sum over `T_0, …, T_s`, each term
/// weighted by `ε_{d_{p(i)-1} - d_i} · sign(t_{p(i)}) · sign(t_i)`.
pub fn index_subres(q: &Poly, p: &Poly, a: &Rat, b: &Rat) -> Result<HalfInt> {
    check_interval(a, b)?;
    let Some(r) = reduced(q, p)? else {
        return Ok(HalfInt::ZERO);
    };
    let chain = subresultant_chain(p, &r)?;
    let t = chain.t_polys();
    let mut doubled = 0;
    for i in 0..chain.s() {
        doubled += chain.coefficient(i).to_i64() * ext_sign_jump(&t[i + 1], &t[i], a, b)?;
    }
    Ok(HalfInt::from_doubled(doubled))
}

/// The sign-variation form over `T_0, …, T_s`. Requires that neither
/// endpoint is a common root of `P` and `Q`.
pub fn index_variation(q: &Poly, p: &Poly, a: &Rat, b: &Rat) -> Result<HalfInt> {
    check_interval(a, b)?;
    // the zero numerator vanishes everywhere, so it is checked before the short-circuit
    let r = reduce_num(q, p)?;
    for x in [a, b] {
        if p.eval(x).is_zero() && r.eval(x).is_zero() {
            return Err(Error::CommonRootEndpoint(x.clone()));
        }
    }
    if r.is_zero() || p.degree() == Some(0) {
        return Ok(HalfInt::ZERO);
    }
    let chain = subresultant_chain(p, &r)?;
    let t = chain.t_polys();
    Ok((0..chain.s())
        .map(|i| var_between(&t[i], &t[i + 1], a, b) * chain.coefficient(i))
        .sum())
}

/// `Ind_ℝ(Q/P)` from the signs of the `t_i` alone.
pub fn index_real_line(q: &Poly, p: &Poly) -> Result<HalfInt> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(r) = reduced(q, p)? else {
        return Ok(HalfInt::ZERO);
    };
    let chain = subresultant_chain(p, &r)?;
    let d = chain.degrees();
    let odd_terms = |from: usize| -> i64 {
        (from..chain.s())
            .filter(|&i| (d[i] - d[i + 1]) % 2 == 1)
            .map(|i| (chain.predicted_sres_sign(i) * Sign::of(chain.lead(i + 1))).to_i64())
            .sum()
    };
    let flipped = p.lc_sign() == Sign::Neg && (chain.p() - chain.q()) % 2 == 1;
    let value = if flipped {
        -Sign::of(chain.lead(1)).to_i64() + odd_terms(1)
    } else {
        odd_terms(0)
    };
    Ok(HalfInt::from_int(value))
}

/// Modified number of sign variations: like the classical count, except
/// that the patterns `+,0,0,+` and `-,0,0,-` count two variations.
pub fn modified_variations_w(signs: &[Sign]) -> Result<i64> {
    match signs.first() {
        None => return Err(Error::MalformedSignSequence("empty sequence")),
        Some(Sign::Zero) => return Err(Error::MalformedSignSequence("leading zero")),
        Some(_) => {}
    }
    let mut w = 0;
    let mut head = 0;
    while let Some(off) = signs[head + 1..].iter().position(|s| !s.is_zero()) {
        let next = head + 1 + off;
        let prod = signs[head] * signs[next];
        w += match (prod, next - head) {
            (Sign::Neg, _) => 1,
            (_, 3) => 2,
            _ => 0,
        };
        head = next;
    }
    Ok(w)
}

/// `W(SR(P, Q); a, b)` over the full list `sResP_p, …, sResP_0` with the
/// identically zero entries removed. Requires that neither endpoint is a root of `P`.
pub fn index_w_baseline(q: &Poly, p: &Poly, a: &Rat, b: &Rat) -> Result<HalfInt> {
    check_interval(a, b)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for x in [a, b] {
        if p.eval(x).is_zero() {
            return Err(Error::EndpointIsRootOfP(x.clone()));
        }
    }
    let Some(r) = reduced(q, p)? else {
        return Ok(HalfInt::ZERO);
    };
    let chain = subresultant_chain(p, &r)?;
    let list: Vec<Poly> = chain
        .subresultants()
        .into_iter()
        .rev()
        .filter(|s| !s.is_zero())
        .collect();
    let w_at = |x: &Rat| {
        let signs: Vec<Sign> = list.iter().map(|s| s.sign_at(x)).collect();
        modified_variations_w(&signs)
    };
    Ok(HalfInt::from_int(w_at(a)? - w_at(b)?))
}

/// Both sides of the (σ, τ)-chain identity
/// `Ind(P_1/P_0) + θ_{n-1} · Ind(P_{n-1}/P_n) = W(σ, τ)_a^b(P_0, …, P_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainIdentity {
    pub lhs: HalfInt,
    pub rhs: HalfInt,
    /// `P_n` divides `P_{n-1}`, so the left side reduces to `Ind(P_1/P_0)`.
    pub tail_divides: bool,
}

impl ChainIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks `a_i P_{i+1} + B_i P_i + c_i P_{i-1} = 0` for some nonzero `a_i, c_i`
/// with `sign(a_i c_i) = σ_i τ_i`, then evaluates both sides of the identity.
pub fn check_chain_identity(
    polys: &[Poly],
    sigma: &[Sign],
    tau: &[Sign],
    a: &Rat,
    b: &Rat,
) -> Result<ChainIdentity> {
    check_interval(a, b)?;
    let n = match polys.len() {
        0 | 1 => {
            return Err(Error::ChainRelation {
                index: 0,
                reason: "a chain needs at least two polynomials",
            })
        }
        len => len - 1,
    };
    if sigma.len() != n - 1 || tau.len() != n - 1 {
        return Err(Error::ChainRelation {
            index: 0,
            reason: "sigma and tau must have length n - 1",
        });
    }
    if let Some(i) = polys.iter().position(Poly::is_zero) {
        return Err(Error::ChainRelation {
            index: i,
            reason: "zero polynomial in chain",
        });
    }
    for i in 1..n {
        // modulo P_i the relation reads c_i·Rem(P_{i-1}) = -a_i·Rem(P_{i+1})
        let r_prev = polys[i - 1].rem(&polys[i])?;
        let r_next = polys[i + 1].rem(&polys[i])?;
        let fail = |reason| Err(Error::ChainRelation { index: i, reason });
        match (r_prev.is_zero(), r_next.is_zero()) {
            (true, true) => continue,
            (false, false) => {}
            _ => return fail("remainders are not proportional"),
        }
        let ratio = r_prev.lc().expect("nonzero") / r_next.lc().expect("nonzero");
        if r_next.scale(&ratio) != r_prev {
            return fail("remainders are not proportional");
        }
        if -Sign::of(&ratio) != sigma[i - 1] * tau[i - 1] {
            return fail("sign of a_i c_i disagrees with sigma_i tau_i");
        }
    }

    let mut theta = vec![Sign::Pos];
    for j in 0..n - 1 {
        let prev = theta[j];
        theta.push(prev * sigma[j] * tau[j]);
    }
    let mut doubled = 0;
    for i in 0..n {
        doubled += theta[i].to_i64() * ext_sign_jump(&polys[i + 1], &polys[i], a, b)?;
    }
    let rhs = HalfInt::from_doubled(doubled);
    let lhs = index_sturm(&polys[1], &polys[0], a, b)?
        + index_sturm(&polys[n - 1], &polys[n], a, b)? * theta[n - 1];
    let tail_divides = polys[n - 1].rem(&polys[n])?.is_zero();
    Ok(ChainIdentity {
        lhs,
        rhs,
        tail_divides,
    })
}

/// Both sides of the inversion formula
/// `Ind(Q/P) + Ind(P/Q) = ½ sign(Q/P, b) - ½ sign(Q/P, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inversion {
    pub forward: HalfInt,
    pub backward: HalfInt,
    pub boundary: HalfInt,
}

impl Inversion {
    pub fn holds(&self) -> bool {
        self.forward + self.backward == self.boundary
    }
}

pub fn inversion_check(q: &Poly, p: &Poly, a: &Rat, b: &Rat) -> Result<Inversion> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(Inversion {
        forward: index_sturm(q, p, a, b)?,
        backward: index_sturm(p, q, a, b)?,
        boundary: HalfInt::from_doubled(ext_sign_jump(q, p, a, b)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{int, rat};

    fn half(doubled: i64) -> HalfInt {
        HalfInt::from_doubled(doubled)
    }

    fn x2m1() -> Poly {
        Poly::from_ints(&[-1, 0, 1])
    }

    fn quintic() -> Poly {
        Poly::from_ints(&[1, 1, 0, 0, 0, 1])
    }

    #[test]
    fn ext_sign_examples() {
        let x0 = int(0);
        assert_eq!(
            ext_sign(
                &Poly::from_ints(&[1, 0, 1]),
                &Poly::from_ints(&[-2, 1]),
                &x0
            ),
            Ok(Sign::Neg)
        );
        assert_eq!(
            ext_sign(&Poly::x(), &Poly::from_ints(&[0, 0, 1]), &x0),
            Ok(Sign::Zero)
        );
        assert_eq!(
            ext_sign(&Poly::from_ints(&[0, 0, 1]), &Poly::x(), &x0),
            Ok(Sign::Zero)
        );
        // common factor with equal multiplicity cancels: (X^2 - X)/(X) at 0 → -1
        assert_eq!(
            ext_sign(&Poly::from_ints(&[0, -1, 1]), &Poly::x(), &x0),
            Ok(Sign::Neg)
        );
        assert_eq!(ext_sign(&Poly::zero(), &Poly::x(), &x0), Ok(Sign::Zero));
        assert_eq!(
            ext_sign(&Poly::x(), &Poly::zero(), &x0),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn local_index_examples() {
        let x0 = int(0);
        let simple = local_index(&Poly::one(), &Poly::x(), &x0).unwrap();
        assert_eq!(
            (simple.plus, simple.minus, simple.total),
            (half(1), half(-1), half(2))
        );
        let even = local_index(&Poly::one(), &Poly::monomial(int(1), 2), &x0).unwrap();
        assert_eq!(
            (even.plus, even.minus, even.total),
            (half(1), half(1), half(0))
        );
        let two = Poly::constant(int(2));
        assert_eq!(local_index(&two, &x2m1(), &int(1)).unwrap().total, half(2));
        assert_eq!(
            local_index(&two, &x2m1(), &int(-1)).unwrap().total,
            half(-2)
        );
        assert_eq!(
            local_index(&two, &x2m1(), &int(3)).unwrap(),
            LocalIndex::ZERO
        );
    }

    #[test]
    fn oracle_examples() {
        let roots = [(int(0), 1)];
        let one = Poly::one();
        assert_eq!(
            index_interval_oracle(&one, &Poly::x(), &roots, &int(-2), &int(2)),
            Ok(half(2))
        );
        assert_eq!(
            index_interval_oracle(&one, &Poly::x(), &roots, &int(0), &int(2)),
            Ok(half(1))
        );
        let roots2 = [(int(-1), 1), (int(1), 1)];
        assert_eq!(
            index_interval_oracle(&Poly::constant(int(2)), &x2m1(), &roots2, &int(-2), &int(2)),
            Ok(half(0))
        );
        assert_eq!(
            index_interval_oracle(&one, &Poly::x(), &[(int(3), 1)], &int(-2), &int(2)),
            Err(Error::NotARoot(int(3)))
        );
        assert!(matches!(
            index_interval_oracle(&one, &Poly::x(), &roots, &int(2), &int(2)),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn reduce_num_examples() {
        assert_eq!(
            reduce_num(&Poly::from_ints(&[0, 0, 2]), &x2m1()),
            Ok(Poly::constant(int(2)))
        );
        assert_eq!(reduce_num(&Poly::x(), &x2m1()), Ok(Poly::x()));
        assert!(reduce_num(&x2m1(), &x2m1()).unwrap().is_zero());
    }

    #[test]
    fn sturm_examples() {
        let p = quintic();
        assert_eq!(
            index_sturm(&p.derivative(), &p, &int(-10), &int(10)),
            Ok(half(2))
        );
        assert_eq!(
            index_sturm(&Poly::one(), &Poly::x(), &int(0), &int(1)),
            Ok(half(1))
        );
        assert_eq!(
            index_sturm(&Poly::zero(), &p, &int(0), &int(1)),
            Ok(half(0))
        );
        assert!(matches!(
            index_sturm(&Poly::one(), &Poly::x(), &int(1), &int(0)),
            Err(Error::EmptyInterval { .. })
        ));
        assert_eq!(
            index_sturm(&Poly::one(), &Poly::zero(), &int(0), &int(1)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn subres_examples() {
        let p = quintic();
        assert_eq!(
            index_subres(&p.derivative(), &p, &int(-10), &int(10)),
            Ok(half(2))
        );
        assert_eq!(
            index_subres(&Poly::from_ints(&[0, 2]), &x2m1(), &int(-2), &int(2)),
            Ok(half(4))
        );
        let p = Poly::from_ints(&[0, -1, 0, 0, 0, 1]);
        assert_eq!(
            index_subres(&p.derivative(), &p, &int(-2), &int(2)),
            Ok(half(6))
        );
    }

    #[test]
    fn variation_examples() {
        let q = Poly::from_ints(&[0, 2]);
        assert_eq!(index_variation(&q, &x2m1(), &int(0), &int(2)), Ok(half(2)));
        assert_eq!(index_variation(&q, &x2m1(), &int(1), &int(2)), Ok(half(1)));
        assert_eq!(
            index_variation(&Poly::x(), &Poly::from_ints(&[0, 0, 1]), &int(0), &int(1)),
            Err(Error::CommonRootEndpoint(int(0)))
        );
        assert_eq!(
            index_variation(&Poly::x(), &Poly::x(), &int(0), &int(1)),
            Err(Error::CommonRootEndpoint(int(0)))
        );
        assert_eq!(
            index_variation(&Poly::x(), &Poly::x(), &int(1), &int(2)),
            Ok(half(0))
        );
    }

    #[test]
    fn real_line_examples() {
        let p = quintic();
        assert_eq!(index_real_line(&p.derivative(), &p), Ok(half(2)));
        let p = Poly::from_ints(&[0, -1, 0, 0, 0, 1]);
        assert_eq!(index_real_line(&p.derivative(), &p), Ok(half(6)));
        let p = Poly::from_ints(&[1, 0, -1]);
        assert_eq!(index_real_line(&p.derivative(), &p), Ok(half(4)));
        // 1/(3X - X^3): +1 at 0, -1 at each of ±√3
        let p = Poly::from_ints(&[0, 3, 0, -1]);
        assert_eq!(index_real_line(&Poly::one(), &p), Ok(half(-2)));
    }

    #[test]
    fn real_line_matches_infinity_variations() {
        let cases = [
            (Poly::from_ints(&[1, 0, -1]), Poly::from_ints(&[0, -2])),
            (Poly::from_ints(&[0, 3, 0, -1]), Poly::from_ints(&[5, 1])),
            (
                Poly::from_ints(&[2, -3, 0, 1, -1]),
                Poly::from_ints(&[1, 0, 4]),
            ),
            (
                Poly::from_ints(&[1, 1, 0, 0, 0, 1]),
                Poly::from_ints(&[1, 0, 0, 0, 5]),
            ),
        ];
        for (p, q) in cases {
            let chain = subresultant_chain(&p, &q).unwrap();
            let t = chain.t_polys();
            let via_inf: HalfInt = (0..chain.s())
                .map(|i| {
                    (var_at_infinity(&t[i], &t[i + 1], Infinity::Neg).0
                        - var_at_infinity(&t[i], &t[i + 1], Infinity::Pos).0)
                        * chain.coefficient(i)
                })
                .sum();
            assert_eq!(index_real_line(&q, &p).unwrap(), via_inf, "P = {p:?}");
        }
    }

    #[test]
    fn w_examples() {
        use Sign::*;
        assert_eq!(modified_variations_w(&[Pos, Zero, Zero, Pos]), Ok(2));
        assert_eq!(modified_variations_w(&[Pos, Neg]), Ok(1));
        assert_eq!(modified_variations_w(&[Pos, Zero, Zero, Zero, Pos]), Ok(0));
        assert_eq!(
            modified_variations_w(&[Neg, Zero, Zero, Neg, Pos, Zero]),
            Ok(3)
        );
        assert_eq!(modified_variations_w(&[Pos, Zero, Pos]), Ok(0));
        assert!(modified_variations_w(&[Zero, Pos]).is_err());
        assert!(modified_variations_w(&[]).is_err());
    }

    #[test]
    fn w_baseline_examples() {
        let p = quintic();
        assert_eq!(
            index_w_baseline(&p.derivative(), &p, &int(-10), &int(10)),
            Ok(half(2))
        );
        assert_eq!(
            index_w_baseline(&Poly::from_ints(&[0, 2]), &x2m1(), &int(-2), &int(2)),
            Ok(half(4))
        );
        assert_eq!(
            index_w_baseline(&Poly::from_ints(&[0, 2]), &x2m1(), &int(1), &int(2)),
            Err(Error::EndpointIsRootOfP(int(1)))
        );
    }

    #[test]
    fn chain_identity_examples() {
        let p = quintic();
        let dp = p.derivative();
        let seq = sturm_sequence(&p, &dp).unwrap();
        let ones = vec![Sign::Pos; seq.s() - 1];
        let id = check_chain_identity(seq.polys(), &ones, &ones, &int(-10), &int(10)).unwrap();
        assert!(id.holds() && id.tail_divides);
        assert_eq!(id.lhs, half(2));

        let chain = subresultant_chain(&p, &dp).unwrap();
        let id = check_chain_identity(
            chain.t_polys(),
            &[Sign::Pos, Sign::Pos],
            &[Sign::Pos, Sign::Neg],
            &int(-10),
            &int(10),
        )
        .unwrap();
        assert!(id.holds());
        // the subresultant chain is not a (1,1),(1,1)-chain
        assert!(check_chain_identity(
            chain.t_polys(),
            &[Sign::Pos, Sign::Pos],
            &[Sign::Pos, Sign::Pos],
            &int(-10),
            &int(10),
        )
        .is_err());

        // n = 1 is the inversion formula
        let pair = [Poly::x(), Poly::one()];
        let id = check_chain_identity(&pair, &[], &[], &int(-1), &int(1)).unwrap();
        let inv = inversion_check(&Poly::one(), &Poly::x(), &int(-1), &int(1)).unwrap();
        assert_eq!(id.rhs, inv.boundary);
        assert!(id.holds());
    }

    #[test]
    fn inversion_examples() {
        let inv = inversion_check(&Poly::one(), &Poly::x(), &int(-1), &int(1)).unwrap();
        assert_eq!(
            (inv.forward, inv.backward, inv.boundary),
            (half(2), half(0), half(2))
        );
        let inv = inversion_check(&Poly::x(), &Poly::one(), &int(-1), &int(1)).unwrap();
        assert_eq!((inv.forward, inv.backward), (half(0), half(2)));
        assert!(inv.holds());
        let p = quintic();
        let inv = inversion_check(&p, &p, &rat(-1, 3), &int(4)).unwrap();
        assert_eq!(
            (inv.forward, inv.backward, inv.boundary),
            (half(0), half(0), half(0))
        );
    }

    #[test]
    fn constant_denominator_has_no_poles() {
        let p = Poly::constant(int(-3));
        assert_eq!(index_sturm(&Poly::x(), &p, &int(-1), &int(1)), Ok(half(0)));
        assert_eq!(index_subres(&Poly::x(), &p, &int(-1), &int(1)), Ok(half(0)));
        assert_eq!(index_real_line(&Poly::x(), &p), Ok(half(0)));
    }
}
