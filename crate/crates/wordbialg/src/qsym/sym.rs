//! Symmetric functions: monomial, Schur and Schur Q expansions of
//! quasi-symmetric functions, with positivity certificates.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::linear::{Coeff, Field, Integral, LinComb, Ordered};

use super::bases::{complete_h, monomial_sym, q_function};
use super::element::QSym;

/// Basis of a [`SymExpansion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SymBasis {
    /// `m_λ`
    #[serde(rename = "m")]
    Monomial,
    /// `h_λ = h_{λ_1} h_{λ_2} ⋯`
    #[serde(rename = "h")]
    Complete,
    /// `s_λ`
    #[serde(rename = "s")]
    Schur,
    /// `q_λ = q_{λ_1} q_{λ_2} ⋯`
    #[serde(rename = "q")]
    QProduct,
    /// `Q_λ`, indexed by strict partitions
    #[serde(rename = "Q")]
    SchurQ,
    /// `P_λ = 2^{-ℓ(λ)} Q_λ`, indexed by strict partitions
    #[serde(rename = "P")]
    SchurP,
}

impl SymBasis {
    pub fn tag(self) -> &'static str {
        match self {
            SymBasis::Monomial => "m",
            SymBasis::Complete => "h",
            SymBasis::Schur => "s",
            SymBasis::QProduct => "q",
            SymBasis::SchurQ => "Q",
            SymBasis::SchurP => "P",
        }
    }
}

/// A symmetric function `Σ c_λ b_λ` in one of the [`SymBasis`] bases.
#[derive(Clone, PartialEq)]
pub struct SymExpansion<S: Coeff> {
    pub basis: SymBasis,
    pub degree: usize,
    pub terms: LinComb<Partition, S>,
}

impl<S: Coeff> SymExpansion<S> {
    pub fn new(basis: SymBasis, degree: usize) -> Self {
        SymExpansion { basis, degree, terms: LinComb::zero() }
    }

    pub fn coeff(&self, lambda: &Partition) -> S {
        self.terms.coeff(lambda)
    }

    /// Back to the monomial quasi-symmetric basis.
    pub fn to_qsym(&self) -> Result<QSym<S>> {
        let d = self.degree;
        let mut out = QSym::zero(d);
        for (lam, c) in self.terms.iter() {
            let f = match self.basis {
                SymBasis::Monomial => monomial_sym(lam, d)?,
                SymBasis::Schur => schur(lam, d)?,
                SymBasis::SchurQ => schur_q(lam, d)?,
                SymBasis::SchurP => schur_p(lam, d)?,
                SymBasis::Complete | SymBasis::QProduct => {
                    let mut acc = QSym::one(d);
                    for &k in lam.parts() {
                        let g = if self.basis == SymBasis::Complete { complete_h(k, d)? } else { q_function(k, d)? };
                        acc = acc.mul(&g);
                    }
                    acc
                }
            };
            out = out.add(&f.scale(c));
        }
        Ok(out)
    }
}

impl<S: Coeff> fmt::Display for SymExpansion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{}{lam}", self.basis.tag())?;
        }
        Ok(())
    }
}

impl<S: Coeff> fmt::Debug for SymExpansion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Coeff> Serialize for SymExpansion<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            part: &'a [usize],
            coeff: String,
        }
        let terms: Vec<Term<'_>> = self.terms.iter().rev().map(|(l, c)| Term { part: l.parts(), coeff: c.to_string() }).collect();
        let mut st = s.serialize_struct("SymExpansion", 3)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Monomial symmetric expansion of a symmetric `f`.
pub fn to_monomial_sym<S: Coeff>(f: &QSym<S>) -> Result<SymExpansion<S>> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut out = SymExpansion::new(SymBasis::Monomial, f.degree());
    for (a, c) in f.terms().iter() {
        if a.parts().windows(2).all(|p| p[0] >= p[1]) {
            out.terms.add_term(a.sort(), c.clone());
        }
    }
    Ok(out)
}

type Row = Arc<Vec<(Partition, i64)>>;
type Cache = OnceLock<RwLock<HashMap<Partition, Row>>>;

fn cached(cache: &'static Cache, lambda: &Partition, build: impl FnOnce() -> Vec<(Partition, i64)>) -> Row {
    let lock = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(r) = lock.read().unwrap().get(lambda) {
        return r.clone();
    }
    let row = Arc::new(build());
    lock.write().unwrap().entry(lambda.clone()).or_insert(row).clone()
}

/// Partitions `ν ⊆ λ` with `λ/ν` a horizontal strip of size `k`.
fn horizontal_strips(lambda: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(lambda: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == lambda.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for nu in (lo..=lambda[i]).rev() {
            let take = lambda[i] - nu;
            if take > left {
                break;
            }
            cur.push(nu);
            rec(lambda, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

fn kostka_rec(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&last, rest)) = mu.split_last() else {
        return lambda.is_empty() as i64;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = horizontal_strips(lambda, last).iter().map(|nu| kostka_rec(nu, rest, memo)).sum();
    memo.insert(key, v);
    v
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> i64 {
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    kostka_rec(lambda.parts(), mu, &mut HashMap::new())
}

/// `(μ, K_{λμ})` for all partitions `μ ⊢ |λ|` with nonzero entry.
pub fn kostka_row(lambda: &Partition) -> Row {
    static CACHE: Cache = OnceLock::new();
    cached(&CACHE, lambda, || {
        let mut memo = HashMap::new();
        Partition::all_of(lambda.size())
            .into_iter()
            .filter_map(|mu| {
                let k = kostka_rec(lambda.parts(), mu.parts(), &mut memo);
                (k != 0).then_some((mu, k))
            })
            .collect()
    })
}

/// Strict `ν` interlacing `λ` (`λ_1 ≥ ν_1 ≥ λ_2 ≥ ν_2 ≥ ⋯`) with
/// `|λ/ν| = k`, with the number of connected components of the shifted
/// skew shape `λ/ν`.
fn shifted_strips(lambda: &[usize], k: usize) -> Vec<(Vec<usize>, u32)> {
    fn rec(lambda: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, u32)>) {
        if i == lambda.len() {
            if left == 0 {
                if let Some(c) = strip_components(lambda, cur) {
                    let mut v = cur.clone();
                    while v.last() == Some(&0) {
                        v.pop();
                    }
                    out.push((v, c));
                }
            }
            return;
        }
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for nu in (lo..=lambda[i]).rev() {
            let take = lambda[i] - nu;
            if take > left {
                break;
            }
            // nonzero parts of ν stay strictly decreasing
            if nu > 0 && i > 0 && cur[i - 1] <= nu {
                continue;
            }
            cur.push(nu);
            rec(lambda, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Components of `λ/ν` in shifted coordinates (row `i` spans columns
/// `i..i+λ_i`), or `None` if it contains a 2×2 square.
fn strip_components(lambda: &[usize], nu: &[usize]) -> Option<u32> {
    let inside = |i: usize, j: usize| i < lambda.len() && j >= i + nu[i] && j < i + lambda[i];
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|i| (i + nu[i]..i + lambda[i]).map(move |j| (i, j))).collect();
    for &(i, j) in &cells {
        if inside(i, j + 1) && inside(i + 1, j) && inside(i + 1, j + 1) {
            return None;
        }
    }
    let mut seen = vec![false; cells.len()];
    let mut comps = 0;
    for s in 0..cells.len() {
        if seen[s] {
            continue;
        }
        comps += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            let (i, j) = cells[x];
            for (y, &(a, b)) in cells.iter().enumerate() {
                if !seen[y] && i.abs_diff(a) + j.abs_diff(b) == 1 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    Some(comps)
}

fn schur_q_rec(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&last, rest)) = mu.split_last() else {
        return lambda.is_empty() as i64;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = shifted_strips(lambda, last).iter().map(|(nu, c)| (1i64 << c) * schur_q_rec(nu, rest, memo)).sum();
    memo.insert(key, v);
    v
}

/// Coefficient of `m_μ` in `Q_λ`: marked shifted tableaux of shape `λ`, content `μ`.
pub fn schur_q_coefficient(lambda: &Partition, mu: &[usize]) -> i64 {
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    schur_q_rec(lambda.parts(), mu, &mut HashMap::new())
}

/// `(μ, [m_μ] Q_λ)` for strict `λ`.
pub fn schur_q_row(lambda: &Partition) -> Result<Row> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.to_string()));
    }
    static CACHE: Cache = OnceLock::new();
    Ok(cached(&CACHE, lambda, || {
        let mut memo = HashMap::new();
        Partition::all_of(lambda.size())
            .into_iter()
            .filter_map(|mu| {
                let k = schur_q_rec(lambda.parts(), mu.parts(), &mut memo);
                (k != 0).then_some((mu, k))
            })
            .collect()
    }))
}

fn from_monomial_row<S: Coeff>(row: &[(Partition, i64)], scale: i64, degree: usize) -> Result<QSym<S>> {
    let mut out = QSym::zero(degree);
    for (mu, k) in row {
        out = out.add(&monomial_sym::<S>(mu, degree)?.scale(&S::int(k / scale)));
    }
    Ok(out)
}

fn size_check(lambda: &Partition, degree: usize) -> Result<()> {
    if lambda.size() > degree {
        return Err(Error::DegreeOverflow { degree: lambda.size(), bound: degree });
    }
    Ok(())
}

/// `s_λ = Σ_μ K_{λμ} m_μ`.
pub fn schur<S: Coeff>(lambda: &Partition, degree: usize) -> Result<QSym<S>> {
    size_check(lambda, degree)?;
    from_monomial_row(&kostka_row(lambda), 1, degree)
}

/// Schur Q-function `Q_λ`, `λ` strict.
pub fn schur_q<S: Coeff>(lambda: &Partition, degree: usize) -> Result<QSym<S>> {
    let row = schur_q_row(lambda)?;
    size_check(lambda, degree)?;
    from_monomial_row(&row, 1, degree)
}

/// Schur P-function `P_λ = 2^{-ℓ(λ)} Q_λ`, which has integer coefficients.
pub fn schur_p<S: Coeff>(lambda: &Partition, degree: usize) -> Result<QSym<S>> {
    let row = schur_q_row(lambda)?;
    size_check(lambda, degree)?;
    from_monomial_row(&row, 1 << lambda.len(), degree)
}

/// Triangular solve against rows whose leading term is `m_λ` scaled by
/// `lead(λ)`; `lead` returns `None` for indices outside the basis.
fn triangular<S: Coeff>(f: &QSym<S>, basis: SymBasis, row: impl Fn(&Partition) -> Result<Option<Row>>) -> Result<SymExpansion<S>> {
    let m = to_monomial_sym(f)?;
    let mut rest: HashMap<Partition, S> = m.terms.iter().map(|(l, c)| (l.clone(), c.clone())).collect();
    let mut out = SymExpansion::new(basis, f.degree());
    loop {
        rest.retain(|_, c| !c.is_zero());
        // lexicographically largest remaining partition is dominance-maximal
        let Some(lead) = rest.keys().max().cloned() else { break };
        let Some(r) = row(&lead)? else {
            return Err(Error::Residual(lead.to_string()));
        };
        let c = rest[&lead].clone();
        for (mu, k) in r.iter() {
            let e = rest.entry(mu.clone()).or_insert_with(S::zero);
            *e = e.clone() - c.clone() * S::int(*k);
        }
        debug_assert!(rest[&lead].is_zero(), "row of {lead} is not unitriangular");
        out.terms.add_term(lead, c);
    }
    Ok(out)
}

/// Schur expansion of a symmetric `f`.
pub fn schur_expand<S: Coeff>(f: &QSym<S>) -> Result<SymExpansion<S>> {
    triangular(f, SymBasis::Schur, |l| Ok(Some(kostka_row(l))))
}

fn p_row(l: &Partition) -> Result<Option<Row>> {
    if !l.is_strict() {
        return Ok(None);
    }
    let r = schur_q_row(l)?;
    let s = 1i64 << l.len();
    Ok(Some(Arc::new(r.iter().map(|(mu, k)| (mu.clone(), k / s)).collect())))
}

/// Schur P expansion; exact over any coefficient ring. Fails with
/// [`Error::Residual`] when `f` is not in the span of the `Q_λ`.
pub fn schur_p_expand<S: Coeff>(f: &QSym<S>) -> Result<SymExpansion<S>> {
    triangular(f, SymBasis::SchurP, p_row)
}

/// Schur Q expansion, `[Q_λ] f = 2^{-ℓ(λ)} [P_λ] f`.
pub fn schur_q_expand<S: Field>(f: &QSym<S>) -> Result<SymExpansion<S>> {
    let p = schur_p_expand(f)?;
    let mut out = SymExpansion::new(SymBasis::SchurQ, f.degree());
    for (l, c) in p.terms.iter() {
        out.terms.add_term(l.clone(), c.clone() / S::int(1 << l.len()));
    }
    Ok(out)
}

/// Signs and integrality of an expansion.
#[derive(Clone, Debug, Serialize)]
pub struct PositivityCertificate {
    pub basis: SymBasis,
    pub positive: bool,
    pub integral: bool,
    /// Indices with a negative coefficient, as `(λ, c)`.
    pub negative: Vec<(Partition, String)>,
    pub terms: usize,
}

impl PositivityCertificate {
    pub fn of<S: Ordered + Integral>(e: &SymExpansion<S>) -> Self {
        let negative: Vec<(Partition, String)> = e.terms.iter().filter(|(_, c)| **c < S::zero()).map(|(l, c)| (l.clone(), c.to_string())).collect();
        PositivityCertificate {
            basis: e.basis,
            positive: negative.is_empty(),
            integral: e.terms.iter().all(|(_, c)| c.is_integral()),
            negative,
            terms: e.terms.len(),
        }
    }
}

/// Schur expansion with its positivity certificate.
pub fn schur_positive<S: Ordered + Integral>(f: &QSym<S>) -> Result<(SymExpansion<S>, PositivityCertificate)> {
    let e = schur_expand(f)?;
    let c = PositivityCertificate::of(&e);
    Ok((e, c))
}

/// Schur Q expansion with its positivity certificate.
pub fn schur_q_positive<S: Field + Ordered + Integral>(f: &QSym<S>) -> Result<(SymExpansion<S>, PositivityCertificate)> {
    let e = schur_q_expand(f)?;
    let c = PositivityCertificate::of(&e);
    Ok((e, c))
}

/// True when every `Q_λ` coefficient of `f` is nonnegative; works over rings
/// without division since `[Q_λ] f` and `[P_λ] f` have the same sign.
pub fn is_schur_q_positive<S: Ordered>(f: &QSym<S>) -> Result<bool> {
    let p = schur_p_expand(f)?;
    Ok(p.terms.iter().all(|(_, c)| *c >= S::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{part, Composition};
    use crate::qsym::bases::fundamental_l;
    use crate::Q;

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&part(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&part(&[3, 2]), &[2, 2, 1]), 2);
        assert_eq!(kostka(&part(&[2, 2]), &[1, 1, 1, 1]), 2);
        let row = kostka_row(&part(&[2, 1]));
        assert_eq!(row.as_slice(), &[(part(&[2, 1]), 1), (part(&[1, 1, 1]), 2)]);
    }

    #[test]
    fn schur_one_row_and_column() {
        let d = 5;
        assert_eq!(schur::<i64>(&part(&[4]), d).unwrap(), complete_h(4, d).unwrap());
        assert_eq!(schur::<i64>(&part(&[1, 1, 1]), d).unwrap(), monomial_sym(&part(&[1, 1, 1]), d).unwrap());
        assert_eq!(to_monomial_sym(&fundamental_l::<i64>(&Composition::from_parts(&[3]), 3).unwrap()).unwrap().terms.len(), 3);
    }

    #[test]
    fn schur_q_small() {
        assert_eq!(schur_q_coefficient(&part(&[2, 1]), &[2, 1]), 4);
        assert_eq!(schur_q_coefficient(&part(&[2, 1]), &[1, 1, 1]), 8);
        assert_eq!(schur_q::<i64>(&part(&[3]), 4).unwrap(), q_function(3, 4).unwrap());
        assert!(matches!(schur_q::<i64>(&part(&[2, 2]), 4), Err(Error::NotStrict(_))));
    }

    #[test]
    fn expansions_round_trip() {
        let d = 6;
        let f = schur::<Q>(&part(&[3, 2, 1]), d).unwrap().add(&schur::<Q>(&part(&[2, 2]), d).unwrap().scale(&Q::from_integer((-2).into())));
        let e = schur_expand(&f).unwrap();
        assert_eq!(e.terms.len(), 2);
        assert_eq!(e.to_qsym().unwrap(), f);
        let (_, cert) = schur_positive(&f).unwrap();
        assert!(!cert.positive);
        let g = schur_q::<Q>(&part(&[3, 1]), d).unwrap();
        let (e, cert) = schur_q_positive(&g).unwrap();
        assert!(cert.positive && cert.integral);
        assert_eq!(e.coeff(&part(&[3, 1])), Q::from_integer(1.into()));
        let h2: QSym<Q> = complete_h(2, d).unwrap();
        assert!(matches!(schur_q_expand(&h2), Err(Error::Residual(_))));
        assert!(matches!(schur_expand(&QSym::<Q>::monomial(&Composition::from_parts(&[1, 2]), 3).unwrap()), Err(Error::NotSymmetric)));
    }
}
