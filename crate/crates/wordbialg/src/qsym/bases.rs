//! Fundamental, peak, multi-fundamental and one-row symmetric functions in the
//! monomial basis.

use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};
use crate::linear::{Coeff, Field, LinComb};

use super::element::QSym;

fn check_degree(alpha: &Composition, degree: usize) -> Result<()> {
    if alpha.total() > degree {
        return Err(Error::DegreeOverflow { degree: alpha.total(), bound: degree });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        (1u64 << (n - 1)) - 1
    }
}

/// `L_α = Σ_{α ≤ β} M_β`.
pub fn fundamental_l<S: Coeff>(alpha: &Composition, degree: usize) -> Result<QSym<S>> {
    check_degree(alpha, degree)?;
    Ok(QSym::from_fundamental(&LinComb::basis(alpha.clone()), degree))
}

/// `K_α = Σ_{I(α) ⊆ I(β) ∪ (I(β)+1)} 2^{ℓ(β)} M_β` for a peak composition `α`.
pub fn peak_k<S: Coeff>(alpha: &Composition, degree: usize) -> Result<QSym<S>> {
    if !alpha.is_peak() {
        return Err(Error::NotPeakComposition(alpha.to_string()));
    }
    check_degree(alpha, degree)?;
    let n = alpha.total();
    if n == 0 {
        return Ok(QSym::one(degree));
    }
    let a = alpha.descent_mask();
    let mut out = QSym::zero(degree);
    for b in 0..=full_mask(n) {
        if a & !(b | b << 1) == 0 {
            let beta = Composition::from_descent_mask(n, b);
            let w = S::int(1i64 << beta.len());
            out.add_term(beta, w);
        }
    }
    Ok(out)
}

/// Peak-basis coefficients of `f`; errors with [`Error::Residual`] when `f`
/// is not in the span of the `K_α`.
pub fn to_peak<S: Field>(f: &QSym<S>) -> Result<LinComb<Composition, S>> {
    let mut rest = f.clone();
    let mut out = LinComb::zero();
    let mut degrees: Vec<usize> = f.terms().keys().map(Composition::total).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for n in degrees {
        if n == 0 {
            let c = rest.coeff(&Composition::empty());
            out.add_term(Composition::empty(), c.clone());
            rest.add_term(Composition::empty(), -c);
            continue;
        }
        // peak sets in increasing order of their element sum; the coefficient
        // of M with descent set P - 1 only sees K_P among the unprocessed ones
        let mut peaks: Vec<u64> = (0..=full_mask(n)).filter(|&m| m & 1 == 0 && m & (m >> 1) == 0).collect();
        peaks.sort_by_key(|&m| ((0..64).filter(|i| m >> i & 1 == 1).map(|i| i + 1).sum::<u64>(), m));
        for p in peaks {
            let probe = Composition::from_descent_mask(n, p >> 1);
            let c = rest.coeff(&probe);
            if c.is_zero() {
                continue;
            }
            let alpha = Composition::from_descent_mask(n, p);
            let k = peak_k::<S>(&alpha, f.degree())?;
            let x = c / S::int(1i64 << (p.count_ones() + 1));
            rest = rest.sub(&k.scale(&x));
            out.add_term(alpha, x);
        }
        if let Some((a, _)) = rest.terms().iter().find(|(a, _)| a.total() == n) {
            return Err(Error::Residual(a.to_string()));
        }
    }
    Ok(out)
}

/// `Σ_{α ⊨ n} Π c_{α_i} M_α`, the image of a product `Π_i g(x_i)` whose
/// single-variable series is `Σ c_k x^k` with `c_0 = 1`.
pub fn from_variable_series<S: Coeff>(c: &[S], n: usize, degree: usize) -> Result<QSym<S>> {
    if n > degree {
        return Err(Error::DegreeOverflow { degree: n, bound: degree });
    }
    let get = |k: usize| c.get(k).cloned().unwrap_or_else(S::zero);
    Ok(QSym::from_terms(
        degree,
        Composition::all_of(n).into_iter().map(|a| {
            let w = a.parts().iter().fold(S::one(), |acc, &k| acc * get(k));
            (a, w)
        }),
    ))
}

/// `h_n`, from `1/(1 - x t)`.
pub fn complete_h<S: Coeff>(n: usize, degree: usize) -> Result<QSym<S>> {
    from_variable_series(&vec![S::one(); n + 1], n, degree)
}

/// `e_n`, from `1 + x t`.
pub fn elementary_e<S: Coeff>(n: usize, degree: usize) -> Result<QSym<S>> {
    from_variable_series(&[S::one(), S::one()], n, degree)
}

/// `q_n`, from `(1 + x t)/(1 - x t)`.
pub fn q_function<S: Coeff>(n: usize, degree: usize) -> Result<QSym<S>> {
    let mut c = vec![S::int(2); n + 1];
    c[0] = S::one();
    from_variable_series(&c, n, degree)
}

/// `m_λ = Σ_{sort(α) = λ} M_α`.
pub fn monomial_sym<S: Coeff>(lambda: &Partition, degree: usize) -> Result<QSym<S>> {
    if lambda.size() > degree {
        return Err(Error::DegreeOverflow { degree: lambda.size(), bound: degree });
    }
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    let mut out = QSym::zero(degree);
    loop {
        out.add_term(Composition::from_parts(&parts), S::one());
        // next permutation of the multiset
        let k = parts.len();
        let Some(i) = (1..k).rev().find(|&i| parts[i - 1] < parts[i]) else { break };
        let j = (i..k).rev().find(|&j| parts[j] > parts[i - 1]).unwrap();
        parts.swap(i - 1, j);
        parts[i..].reverse();
    }
    Ok(out)
}

/// Number of ways to cut `1^{β_1} 2^{β_2} ⋯` into `|α|` strictly increasing
/// blocks, cutting strictly between distinct letters at the positions of `I(α)`.
pub fn multi_fundamental_coefficient(alpha: &Composition, beta: &Composition) -> u64 {
    let n = alpha.total();
    let big_n = beta.total();
    if n == 0 || big_n == 0 {
        return (n == 0 && big_n == 0) as u64;
    }
    if big_n < n {
        return 0;
    }
    let strict = alpha.descent_mask();
    let mut forced = vec![false; big_n];
    let mut pos = 0;
    for &b in beta.parts() {
        for k in 0..b {
            forced[pos + k] = k + 1 < b;
        }
        pos += b;
    }
    // ways[j]: cuts placed so far
    let mut ways = vec![0u64; n];
    ways[0] = 1;
    for &must in forced.iter().take(big_n - 1) {
        let mut next = vec![0u64; n];
        for j in 0..n {
            if ways[j] == 0 {
                continue;
            }
            if !must {
                next[j] += ways[j];
            }
            if j + 1 < n && !(must && strict >> j & 1 == 1) {
                next[j + 1] += ways[j];
            }
        }
        ways = next;
    }
    ways[n - 1]
}

/// `L̃_α` truncated at `degree`.
pub fn multi_fundamental<S: Coeff>(alpha: &Composition, degree: usize) -> Result<QSym<S>> {
    check_degree(alpha, degree)?;
    let mut out = QSym::zero(degree);
    for big_n in alpha.total()..=degree {
        for beta in Composition::all_of(big_n) {
            let c = multi_fundamental_coefficient(alpha, &beta);
            if c > 0 {
                out.add_term(beta, S::int(c as i64));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::comp;
    use crate::Q;

    #[test]
    fn one_row_functions() {
        let h: QSym<i64> = complete_h(3, 3).unwrap();
        let l: QSym<i64> = fundamental_l(&comp(&[3]), 3).unwrap();
        assert_eq!(h, l);
        assert_eq!(fundamental_l::<i64>(&comp(&[1, 1]), 2).unwrap().terms().len(), 1);
        let q: QSym<i64> = q_function(3, 3).unwrap();
        assert_eq!(q, peak_k(&comp(&[3]), 3).unwrap());
        assert_eq!(q.coeff(&comp(&[1, 1, 1])), 8);
        let e: QSym<i64> = elementary_e(3, 3).unwrap();
        assert_eq!(e, QSym::from_terms(3, [(comp(&[1, 1, 1]), 1)]));
    }

    #[test]
    fn peak_errors_and_solve() {
        assert!(matches!(peak_k::<i64>(&comp(&[1, 2]), 3), Err(Error::NotPeakComposition(_))));
        let d = 6;
        let f = peak_k::<Q>(&comp(&[2, 3]), d).unwrap().add(&peak_k::<Q>(&comp(&[5]), d).unwrap().scale(&Q::from_integer(3.into())));
        let c = to_peak(&f).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.coeff(&comp(&[5])), Q::from_integer(3.into()));
        let m: QSym<Q> = QSym::monomial(&comp(&[1, 2]), 3).unwrap();
        assert!(matches!(to_peak(&m), Err(Error::Residual(_))));
    }

    #[test]
    fn monomial_symmetric_functions() {
        let m: QSym<i64> = monomial_sym(&Partition::new(vec![2, 1, 1]), 4).unwrap();
        assert_eq!(m.terms().len(), 3);
        assert!(m.is_symmetric());
    }

    #[test]
    fn multi_fundamental_bottom_degree_is_fundamental() {
        for n in 1..=4 {
            for a in Composition::all_of(n) {
                let lt: QSym<i64> = multi_fundamental(&a, n + 2).unwrap();
                assert_eq!(lt.homogeneous(n), fundamental_l(&a, n + 2).unwrap().homogeneous(n));
            }
        }
        // L̃_(1) = Σ_k e_k shape: M_(1^k) only
        let l1: QSym<i64> = multi_fundamental(&comp(&[1]), 4).unwrap();
        assert_eq!(l1.terms().len(), 4);
        assert_eq!(l1.coeff(&comp(&[1, 1, 1])), 1);
    }
}
