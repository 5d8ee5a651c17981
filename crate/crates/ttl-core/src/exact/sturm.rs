//! Sturm sequences: exact real-root counting for squarefree polynomials.

use num_traits::Signed;

use super::poly::Poly;
use super::ExactError;

/// f divided by gcd(f, f'), normalized monic.
pub fn squarefree_part(f: &Poly) -> Result<Poly, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Ok(Poly::one());
    }
    let g = f.gcd(&f.derivative());
    Ok(f.exact_div(&g).make_monic())
}

/// Sign of the polynomial at +∞ (+1/－1; never 0 for nonzero input).
fn sign_at_pos_inf(f: &Poly) -> i32 {
    if f.leading().is_positive() {
        1
    } else {
        -1
    }
}

/// Sign at −∞: leading sign flipped when the degree is odd.
fn sign_at_neg_inf(f: &Poly) -> i32 {
    let s = sign_at_pos_inf(f);
    if f.degree() % 2 == 1 {
        -s
    } else {
        s
    }
}

fn sign_variations(signs: &[i32]) -> usize {
    let mut count = 0;
    let mut last = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact number of distinct real roots of a squarefree polynomial, by
/// sign-variation counts of the Sturm sequence at −∞ and +∞.
pub fn sturm_real_root_count(f: &Poly) -> Result<usize, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if !f.is_squarefree() {
        return Err(ExactError::NotSquarefree);
    }
    if f.degree() == 0 {
        return Ok(0);
    }
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let last = &chain[chain.len() - 1];
        let prev = &chain[chain.len() - 2];
        let (_, r) = prev.div_rem(last);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    let at_neg: Vec<i32> = chain.iter().map(sign_at_neg_inf).collect();
    let at_pos: Vec<i32> = chain.iter().map(sign_at_pos_inf).collect();
    Ok(sign_variations(&at_neg) - sign_variations(&at_pos))
}
