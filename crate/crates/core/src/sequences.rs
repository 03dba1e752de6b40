//! Signed remainder sequences and subresultants.
//!
//! Two independent routes to the subresultant polynomials live here: the
//! determinant definition ([`subresultant_det`]) and the Structure Theorem
//! recurrence ([`subresultant_chain`]). They share nothing beyond `poly`, so
//! each can be used to check the other.

use crate::error::{Error, Result};
use crate::number::{int, rat_pow, Rat, Sign};
use crate::poly::Poly;
use num_traits::{One, Zero};

/// `(-1)^(n(n-1)/2)`: `+1` when `n mod 4 ∈ {0, 1}`, `-1` otherwise.
pub fn epsilon(n: i64) -> Sign {
    match n.rem_euclid(4) {
        0 | 1 => Sign::Pos,
        _ => Sign::Neg,
    }
}

/// `(S_0, …, S_s)` with `S_0 = P`, `S_1 = Q`, `S_{i+1} = -Rem(S_{i-1}, S_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmSequence {
    polys: Vec<Poly>,
    degrees: Vec<usize>,
}

impl SturmSequence {
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Index of the last polynomial.
    pub fn s(&self) -> usize {
        self.polys.len() - 1
    }
}

pub fn sturm_sequence(p: &Poly, q: &Poly) -> Result<SturmSequence> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut polys = vec![p.clone()];
    if !q.is_zero() {
        polys.push(q.clone());
        loop {
            let n = polys.len();
            let next = -polys[n - 2].rem(&polys[n - 1])?;
            if next.is_zero() {
                break;
            }
            polys.push(next);
        }
    }
    let degrees = polys.iter().map(|s| s.degree().expect("nonzero")).collect();
    Ok(SturmSequence { polys, degrees })
}

fn check_pair(p: &Poly, q: &Poly) -> Result<(usize, usize)> {
    match (p.degree(), q.degree()) {
        (Some(dp), Some(dq)) if dp >= 1 && dq < dp => Ok((dp, dq)),
        (dp, dq) => Err(Error::degree(dp, dq)),
    }
}

/// Determinant by fraction-field Gaussian elimination, pivoting on any nonzero entry.
fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let inv = m[col][col].recip();
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

/// `sResP_j(P, Q)` straight from its determinant definition, including the
/// conventions for `j > q`.
pub fn subresultant_det(p: &Poly, q: &Poly, j: usize) -> Result<Poly> {
    let (dp, dq) = check_pair(p, q)?;
    if j > dp {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            min: 0,
            max: dp as i64,
        });
    }
    if j == dp {
        return Ok(p.clone());
    }
    if j > dq {
        return Ok(if j == dp - 1 { q.clone() } else { Poly::zero() });
    }

    // Rows X^{q-j-1}P, …, P, Q, …, X^{p-j-1}Q; the numeric columns hold the
    // coefficients of X^{p+q-j-1} down to X^{j+1}.
    let rows: Vec<Poly> = (0..dq - j)
        .rev()
        .map(|k| p.shift(k))
        .chain((0..dp - j).map(|k| q.shift(k)))
        .collect();
    let n = dp + dq - 2 * j;
    let top = dp + dq - j - 1;
    let numeric: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| (0..n - 1).map(|c| row.coeff(top - c)).collect())
        .collect();

    // Linearity in the last column: one numeric determinant per power of X.
    let coeffs = (0..=top)
        .map(|e| {
            let m = numeric
                .iter()
                .zip(&rows)
                .map(|(num, row)| {
                    let mut r = num.clone();
                    r.push(row.coeff(e));
                    r
                })
                .collect();
            determinant(m)
        })
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// `[sResP_0, …, sResP_p]` by determinants.
pub fn subresultants_det(p: &Poly, q: &Poly) -> Result<Vec<Poly>> {
    let (dp, _) = check_pair(p, q)?;
    (0..=dp).map(|j| subresultant_det(p, q, j)).collect()
}

/// The subresultant chain `T_0 = P, T_1 = Q, …, T_s` with its sign tables.
///
/// Index conventions: `a`, `c`, `sigma`, `tau` are stored for `1 ≤ i ≤ s-1`
/// at position `i - 1`; `theta` covers `0 ≤ i ≤ s-1`; everything else covers
/// `0 ≤ i ≤ s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubresultantChain {
    p: usize,
    q: usize,
    degrees: Vec<usize>,
    t_polys: Vec<Poly>,
    lead: Vec<Rat>,
    sres: Vec<Rat>,
    a: Vec<Rat>,
    c: Vec<Rat>,
    sigma: Vec<Sign>,
    tau: Vec<Sign>,
    theta: Vec<Sign>,
    pmap: Vec<usize>,
}

/// `sRes_{d_i} = ε_δ · t_i^δ / sRes_{d_{i-1}}^{δ-1}` with `δ = d_{i-1} - d_i`.
fn next_sres(gap: usize, t: &Rat, prev: &Rat) -> Rat {
    let val = rat_pow(t, gap) / rat_pow(prev, gap - 1);
    match epsilon(gap as i64) {
        Sign::Neg => -val,
        _ => val,
    }
}

pub fn subresultant_chain(p: &Poly, q: &Poly) -> Result<SubresultantChain> {
    let (dp, dq) = check_pair(p, q)?;
    let t1 = q.lc().expect("nonzero").clone();
    let mut t_polys = vec![p.clone(), q.clone()];
    let mut degrees = vec![dp, dq];
    let mut sres = vec![Rat::one(), next_sres(dp - dq, &t1, &Rat::one())];
    let mut lead = vec![Rat::one(), t1];
    let (mut a, mut c) = (Vec::new(), Vec::new());

    for i in 1.. {
        let ci = &lead[i] * &sres[i];
        let ai = &lead[i - 1] * &sres[i - 1];
        let rem = t_polys[i - 1].rem(&t_polys[i])?.scale(&ci);
        if rem.is_zero() {
            break;
        }
        let next = rem.scale(&-ai.recip());
        let d = next.degree().expect("nonzero");
        let t = next.lc().expect("nonzero").clone();
        sres.push(next_sres(degrees[i] - d, &t, &sres[i]));
        degrees.push(d);
        lead.push(t);
        t_polys.push(next);
        a.push(ai);
        c.push(ci);
    }

    let sigma: Vec<Sign> = a.iter().map(Sign::of).collect();
    let tau: Vec<Sign> = c.iter().map(Sign::of).collect();
    let s = t_polys.len() - 1;
    let mut theta = vec![Sign::Pos];
    for j in 0..s.saturating_sub(1) {
        let prev = *theta.last().expect("nonempty");
        theta.push(prev * sigma[j] * tau[j]);
    }
    let mut pmap = vec![0];
    for i in 1..=s {
        let odd = (degrees[i - 1] - degrees[i]) % 2 == 1;
        pmap.push(if odd { i } else { pmap[i - 1] });
    }

    Ok(SubresultantChain {
        p: dp,
        q: dq,
        degrees,
        t_polys,
        lead,
        sres,
        a,
        c,
        sigma,
        tau,
        theta,
        pmap,
    })
}

impl SubresultantChain {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn s(&self) -> usize {
        self.t_polys.len() - 1
    }

    /// `(d_0, …, d_s)`
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `d_{i-1}`, with `d_{-1} = p + 1`.
    pub fn degree_before(&self, i: usize) -> usize {
        if i == 0 {
            self.p + 1
        } else {
            self.degrees[i - 1]
        }
    }

    /// `d_{i-1} - d_i`
    pub fn gap(&self, i: usize) -> usize {
        self.degree_before(i) - self.degrees[i]
    }

    pub fn max_gap(&self) -> usize {
        (1..=self.s()).map(|i| self.gap(i)).max().unwrap_or(0)
    }

    pub fn t_polys(&self) -> &[Poly] {
        &self.t_polys
    }

    pub fn t_poly(&self, i: usize) -> &Poly {
        &self.t_polys[i]
    }

    /// `t_i`, the leading coefficient of `T_i` for `i ≥ 1`; `t_0 = 1`.
    pub fn lead(&self, i: usize) -> &Rat {
        &self.lead[i]
    }

    /// `sRes_{d_i}(P, Q)`
    pub fn sres(&self, i: usize) -> &Rat {
        &self.sres[i]
    }

    /// `a_i` for `1 ≤ i ≤ s-1`.
    pub fn a(&self, i: usize) -> &Rat {
        &self.a[i - 1]
    }

    /// `c_i` for `1 ≤ i ≤ s-1`.
    pub fn c(&self, i: usize) -> &Rat {
        &self.c[i - 1]
    }

    pub fn sigma(&self) -> &[Sign] {
        &self.sigma
    }

    pub fn tau(&self) -> &[Sign] {
        &self.tau
    }

    /// `θ(σ, τ)_0, …, θ(σ, τ)_{s-1}`
    pub fn theta(&self) -> &[Sign] {
        &self.theta
    }

    /// `p(0), …, p(s)`
    pub fn pmap(&self) -> &[usize] {
        &self.pmap
    }

    /// `B_i = -Quot(c_i · T_{i-1}, T_i)`, recomputed on demand.
    pub fn b(&self, i: usize) -> Poly {
        let (quot, _) = self.t_polys[i - 1]
            .scale(self.c(i))
            .euclid_div(&self.t_polys[i])
            .expect("T_i is nonzero");
        -quot
    }

    /// True when `gcd(P, Q)` is nonconstant.
    pub fn has_common_factor(&self) -> bool {
        self.degrees[self.s()] > 0
    }

    /// `ε_{d_{p(i)-1} - d_i} · sign(t_{p(i)}) · sign(t_i)`
    pub fn coefficient(&self, i: usize) -> Sign {
        self.predicted_sres_sign(i) * Sign::of(&self.lead[i])
    }

    /// `ε_{d_{p(i)-1} - d_i} · sign(t_{p(i)})`
    pub fn predicted_sres_sign(&self, i: usize) -> Sign {
        let pi = self.pmap[i];
        let gap = self.degree_before(pi) - self.degrees[i];
        epsilon(gap as i64) * Sign::of(&self.lead[pi])
    }

    /// The full list `[sResP_0, …, sResP_p]` rebuilt from the `T_i` and the
    /// proportionality `sRes_{d_i} · T_i = t_i · sResP_{d_i}`.
    pub fn subresultants(&self) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.p + 1];
        out[self.p] = self.t_polys[0].clone();
        for i in 1..=self.s() {
            let ti = &self.t_polys[i];
            out[self.degree_before(i) - 1] = ti.clone();
            out[self.degrees[i]] = ti.scale(&(&self.sres[i] / &self.lead[i]));
        }
        out
    }
}

/// `ε_{d_{p(i)-1} - d_i} · sign(t_{p(i)})`, which equals `sign(sRes_{d_i})`.
pub fn sres_sign_via_lemma(chain: &SubresultantChain, i: usize) -> Result<Sign> {
    if i > chain.s() {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 0,
            max: chain.s() as i64,
        });
    }
    Ok(chain.predicted_sres_sign(i))
}

/// `X^5 + αX + β`, the running example family.
pub fn quintic_family(alpha: &Rat, beta: &Rat) -> Poly {
    Poly::from_coeffs(vec![
        beta.clone(),
        alpha.clone(),
        Rat::zero(),
        Rat::zero(),
        Rat::zero(),
        int(1),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat;

    fn quintic() -> (Poly, Poly) {
        let p = quintic_family(&int(1), &int(1));
        let dp = p.derivative();
        (p, dp)
    }

    #[test]
    fn epsilon_pattern() {
        assert_eq!(epsilon(0), Sign::Pos);
        assert_eq!(epsilon(1), Sign::Pos);
        assert_eq!(epsilon(2), Sign::Neg);
        assert_eq!(epsilon(3), Sign::Neg);
        assert_eq!(epsilon(-1), Sign::Neg);
        for n in -20..20 {
            for k in -5..5 {
                let parity = if k % 2 == 0 { Sign::Pos } else { Sign::Neg };
                assert_eq!(epsilon(2 * k + n), parity * epsilon(n));
            }
        }
    }

    #[test]
    fn sturm_sequence_examples() {
        let (p, dp) = quintic();
        let seq = sturm_sequence(&p, &dp).unwrap();
        assert_eq!(seq.s(), 3);
        assert_eq!(seq.degrees(), &[5, 4, 1, 0]);
        assert_eq!(seq.polys()[2], Poly::from_coeffs(vec![int(-1), rat(-4, 5)]));
        assert_eq!(seq.polys()[3], Poly::constant(rat(-3381, 256)));

        let p2 = Poly::from_ints(&[-1, 0, 1]);
        let only = sturm_sequence(&p2, &Poly::zero()).unwrap();
        assert_eq!(only.polys(), std::slice::from_ref(&p2));
        assert_eq!(only.s(), 0);

        let seq2 = sturm_sequence(&p2, &Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(seq2.polys(), &[p2, Poly::from_ints(&[0, 2]), Poly::one()]);

        assert_eq!(
            sturm_sequence(&Poly::zero(), &Poly::one()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn determinant_examples() {
        let (p, dp) = quintic();
        assert_eq!(subresultant_det(&p, &dp, 5).unwrap(), p);
        assert_eq!(subresultant_det(&p, &dp, 4).unwrap(), dp);
        assert_eq!(
            subresultant_det(&p, &dp, 3).unwrap(),
            Poly::from_ints(&[-25, -20])
        );
        assert!(subresultant_det(&p, &dp, 2).unwrap().is_zero());
        assert_eq!(
            subresultant_det(&p, &dp, 1).unwrap(),
            Poly::from_ints(&[400, 320])
        );
        assert_eq!(
            subresultant_det(&p, &dp, 0).unwrap(),
            Poly::from_ints(&[3381])
        );
        assert!(matches!(
            subresultant_det(&p, &dp, 6),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn determinant_conventions_for_low_degree_q() {
        // q = 1 < p - 1 = 3: sResP_3 = Q, sResP_2 = 0
        let p = Poly::from_ints(&[1, 0, 0, 0, 1]);
        let q = Poly::from_ints(&[2, 3]);
        assert_eq!(subresultant_det(&p, &q, 3).unwrap(), q);
        assert!(subresultant_det(&p, &q, 2).unwrap().is_zero());
        assert_eq!(subresultant_det(&p, &q, 1).unwrap().degree(), Some(1));
    }

    #[test]
    fn chain_example() {
        let (p, dp) = quintic();
        let chain = subresultant_chain(&p, &dp).unwrap();
        assert_eq!(chain.s(), 3);
        assert_eq!(chain.degree_before(0), 6);
        assert_eq!(chain.degrees(), &[5, 4, 1, 0]);
        assert_eq!(chain.t_poly(2), &Poly::from_ints(&[-25, -20]));
        assert_eq!(chain.lead(0), &int(1));
        assert_eq!(chain.lead(1), &int(5));
        assert_eq!(chain.lead(2), &int(-20));
        assert_eq!(chain.t_poly(3), &Poly::from_ints(&[3381]));
        assert_eq!(chain.sres(2), &int(320));
        assert_eq!(chain.a(1), &int(1));
        assert_eq!(chain.c(1), &int(25));
        assert_eq!(chain.a(2), &int(25));
        assert_eq!(chain.c(2), &int(-6400));
        assert_eq!(chain.sigma(), &[Sign::Pos, Sign::Pos]);
        assert_eq!(chain.tau(), &[Sign::Pos, Sign::Neg]);
        assert_eq!(chain.pmap(), &[0, 1, 2, 3]);
        assert_eq!(chain.theta(), &[Sign::Pos, Sign::Pos, Sign::Neg]);
        assert_eq!(chain.b(1), Poly::monomial(int(-5), 1));
    }

    #[test]
    fn chain_rejects_bad_degrees() {
        let p = Poly::from_ints(&[1, 1]);
        assert!(matches!(
            subresultant_chain(&p, &Poly::from_ints(&[1, 2])),
            Err(Error::DegreeConstraint { .. })
        ));
        assert!(subresultant_chain(&p, &Poly::zero()).is_err());
        assert!(subresultant_chain(&Poly::one(), &Poly::one()).is_err());
    }

    #[test]
    fn lemma_sign_examples() {
        let (p, dp) = quintic();
        let chain = subresultant_chain(&p, &dp).unwrap();
        assert_eq!(sres_sign_via_lemma(&chain, 0), Ok(Sign::Pos));
        assert_eq!(sres_sign_via_lemma(&chain, 2), Ok(Sign::Pos));
        for i in 0..=chain.s() {
            assert_eq!(
                sres_sign_via_lemma(&chain, i).unwrap(),
                Sign::of(chain.sres(i))
            );
        }
        assert!(sres_sign_via_lemma(&chain, 4).is_err());
    }

    #[test]
    fn reconstructed_list_matches_determinants_on_example() {
        let (p, dp) = quintic();
        let chain = subresultant_chain(&p, &dp).unwrap();
        assert_eq!(chain.subresultants(), subresultants_det(&p, &dp).unwrap());
    }

    #[test]
    fn non_coprime_chain_stops_at_gcd() {
        // P = (X-1)^2 (X+2), Q = P'
        let p = Poly::from_roots(&int(1), &[(int(1), 2), (int(-2), 1)]);
        let chain = subresultant_chain(&p, &p.derivative()).unwrap();
        assert!(chain.has_common_factor());
        assert_eq!(chain.t_poly(chain.s()).degree(), Some(1));
        assert_eq!(chain.t_poly(chain.s()).root_multiplicity(&int(1)), Ok(1));
        let list = chain.subresultants();
        assert!(list[0].is_zero());
        assert_eq!(list, subresultants_det(&p, &p.derivative()).unwrap());
    }
}
