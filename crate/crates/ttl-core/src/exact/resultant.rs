//! Resultants by subresultant remainder sequences, composed sums via
//! resultant interpolation, and exact polynomial square roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{rat_int, Poly, Rat};
use super::ExactError;

fn deg(a: &[BigInt]) -> usize {
    a.len() - 1
}

fn trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn scale_div(a: &[BigInt], d: &BigInt) -> Vec<BigInt> {
    a.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero(), "inexact division in PRS");
            q
        })
        .collect()
}

/// Pseudo-remainder: returns lc(b)^(δ+1)·a mod b with δ = deg a − deg b.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(deg(a) >= deg(b));
    let d = b.last().unwrap().clone();
    let db = deg(b);
    let mut e = (deg(a) - db + 1) as i64;
    let mut r = a.to_vec();
    while !r.is_empty() && r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next = vec![BigInt::zero(); r.len() - 1];
        // d·r − lr·x^shift·b, top term cancels
        for (i, c) in r.iter().enumerate().take(r.len() - 1) {
            next[i] = c * &d;
        }
        for (i, c) in b.iter().enumerate().take(db) {
            next[shift + i] -= &lr * c;
        }
        r = trim(next);
        e -= 1;
        if r.is_empty() {
            break;
        }
    }
    let mut de = BigInt::one();
    for _ in 0..e {
        de *= &d;
    }
    r.into_iter().map(|c| c * &de).collect()
}

fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// Resultant of two nonzero integer polynomials via the subresultant PRS.
fn int_resultant(a_in: &[BigInt], b_in: &[BigInt]) -> BigInt {
    let mut a = a_in.to_vec();
    let mut b = b_in.to_vec();
    let mut sign = 1i32;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        let v = pow_big(&b[0], deg(&a));
        return if sign < 0 { -v } else { v };
    }
    let ca = content(&a);
    let cb = content(&b);
    a = scale_div(&a, &ca);
    b = scale_div(&b, &cb);
    let mut t = pow_big(&ca, deg(&b)) * pow_big(&cb, deg(&a));
    if sign < 0 {
        t = -t;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = deg(&a);
        let db = deg(&b);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            t = -t;
        }
        let r = trim(prem(&a, &b));
        if r.is_empty() {
            return BigInt::zero();
        }
        a = b;
        let divisor = &g * pow_big(&h, delta);
        b = scale_div(&r, &divisor);
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let (q, rem) = pow_big(&g, delta).div_rem(&pow_big(&h, delta - 1));
            debug_assert!(rem.is_zero());
            q
        };
        if deg(&b) == 0 {
            let da = deg(&a);
            let num = pow_big(&b[0], da);
            let (hh, rem) = num.div_rem(&pow_big(&h, da - 1));
            debug_assert!(rem.is_zero());
            return t * hh;
        }
    }
}

/// Res(f, g): product of g over the roots of f, times leading-coefficient
/// factors. Computed by a subresultant remainder sequence after clearing
/// denominators.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Rat, ExactError> {
    if f.is_zero() || g.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if f.degree() == 0 && g.degree() == 0 {
        return Ok(Rat::one());
    }
    let (fi, df) = f.to_integer_scaled();
    let (gi, dg) = g.to_integer_scaled();
    let raw = int_resultant(&fi, &gi);
    // Res(f, g) = Res(df·f, dg·g) / (df^deg g · dg^deg f)
    let denom = pow_big(&df, g.degree()) * pow_big(&dg, f.degree());
    Ok(Rat::new(raw, denom))
}

/// Newton divided-difference interpolation through (x_i, v_i).
fn interpolate(xs: &[Rat], vs: &[Rat]) -> Poly {
    let n = xs.len();
    let mut table = vs.to_vec();
    let mut newton = Vec::with_capacity(n);
    newton.push(table[0].clone());
    for k in 1..n {
        for i in 0..n - k {
            table[i] = (&table[i + 1] - &table[i]) / (&xs[i + k] - &xs[i]);
        }
        newton.push(table[0].clone());
    }
    let mut acc = Poly::constant(newton[n - 1].clone());
    for k in (0..n - 1).rev() {
        let lin = Poly::new(vec![-xs[k].clone(), Rat::one()]);
        acc = &(&acc * &lin) + &Poly::constant(newton[k].clone());
    }
    acc
}

/// Monic polynomial of degree deg f · deg g whose roots are all sums
/// α + β over roots α of f and β of g. Computed as Res_y(f(y), g(x−y))
/// by interpolation at deg f · deg g + 1 integer points.
pub fn composed_sum(f: &Poly, g: &Poly) -> Result<Poly, ExactError> {
    if !f.is_monic() || !g.is_monic() {
        return Err(ExactError::NonMonic);
    }
    if f.degree() < 1 || g.degree() < 1 {
        return Err(ExactError::ConstantPolynomial);
    }
    let n = f.degree() * g.degree();
    let mut xs = Vec::with_capacity(n + 1);
    let mut vs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let x0 = rat_int(k as i64);
        // g(x0 − y) as a polynomial in y has constant leading coefficient,
        // so specializing x before the resultant is sound.
        let b = g.compose_linear(&rat_int(-1), &x0);
        vs.push(resultant(f, &b)?);
        xs.push(x0);
    }
    let out = interpolate(&xs, &vs);
    debug_assert_eq!(out.degree(), n);
    debug_assert!(out.is_monic());
    Ok(out)
}

/// Monic square root: returns g with g² = f, or None when f is not a square
/// (including non-monic or odd-degree input).
pub fn poly_exact_sqrt(f: &Poly) -> Option<Poly> {
    if f.is_zero() {
        return Some(Poly::zero());
    }
    if !f.is_monic() || !f.degree().is_multiple_of(2) {
        return None;
    }
    let m = f.degree() / 2;
    let mut g = vec![Rat::zero(); m + 1];
    g[m] = Rat::one();
    for i in (0..m).rev() {
        // coefficient of x^(m+i) in g²: 2·g_i plus cross terms already known
        let mut s = f.coeff(m + i);
        let mut a = i + 1;
        while a < m {
            let b = m + i - a;
            if b <= a {
                break;
            }
            if b < m {
                s -= &g[a] * &g[b] * rat_int(2);
            }
            a += 1;
        }
        // the middle square term when m+i is even and (m+i)/2 is strictly inside
        if (m + i).is_multiple_of(2) {
            let mid = (m + i) / 2;
            if mid > i && mid < m {
                s -= &g[mid] * &g[mid];
            }
        }
        g[i] = s / rat_int(2);
    }
    let cand = Poly::new(g);
    if &(&cand * &cand) == f {
        Some(cand)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    /// Independent oracle: Sylvester matrix determinant by fraction-free
    /// Gaussian elimination over the rationals.
    fn sylvester_resultant(f: &Poly, g: &Poly) -> Rat {
        let m = f.degree();
        let n = g.degree();
        if m == 0 && n == 0 {
            return Rat::one();
        }
        let size = m + n;
        let mut mat = vec![vec![Rat::zero(); size]; size];
        for row in 0..n {
            for (k, c) in f.coeffs().iter().enumerate() {
                mat[row][row + (m - k)] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in g.coeffs().iter().enumerate() {
                mat[n + row][row + (n - k)] = c.clone();
            }
        }
        // plain rational elimination
        let mut det = Rat::one();
        for col in 0..size {
            let pivot = (col..size).find(|&r| !mat[r][col].is_zero());
            let Some(pr) = pivot else {
                return Rat::zero();
            };
            if pr != col {
                mat.swap(pr, col);
                det = -det;
            }
            det *= mat[col][col].clone();
            let inv = mat[col][col].clone().recip();
            for r in col + 1..size {
                if mat[r][col].is_zero() {
                    continue;
                }
                let factor = &mat[r][col] * &inv;
                let pivot_row = mat[col].clone();
                for (c, pivot_entry) in pivot_row.iter().enumerate().skip(col) {
                    let sub = &factor * pivot_entry;
                    mat[r][c] = &mat[r][c] - &sub;
                }
            }
        }
        det
    }

    #[test]
    fn resultant_examples() {
        // Res(x−2, x−3) = g(2) = −1
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), rat_int(-1));
        // shared root
        assert_eq!(
            resultant(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap(),
            rat_int(0)
        );
        // Res(x²−2, x²−3) = ∏(β²−2) over β = ±√3 equals (3−2)² = 1
        assert_eq!(
            resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(),
            rat_int(1)
        );
    }

    #[test]
    fn resultant_matches_sylvester_oracle() {
        let cases: Vec<(Poly, Poly)> = vec![
            (p(&[-2, 0, 1]), p(&[-3, 0, 1])),
            (p(&[1, 2, 3, 4]), p(&[-5, 1, 7])),
            (p(&[0, -3, 1]), p(&[2, 2])),
            (p(&[4, 0, 0, -1]), p(&[1, 1, 1, 1, 1])),
            (p(&[-7, 3]), p(&[2, 0, 0, 0, 5])),
            (p(&[6, -5, 1]), p(&[-6, 1, 1])), // share root x=2? (x-2)(x-3) vs (x+3)(x-2)
        ];
        for (f, g) in cases {
            let prs = resultant(&f, &g).unwrap();
            let syl = sylvester_resultant(&f, &g);
            assert_eq!(prs, syl, "PRS vs Sylvester mismatch for {f} / {g}");
            // antisymmetry up to sign
            let rev = resultant(&g, &f).unwrap();
            let expect = if (f.degree() * g.degree()) % 2 == 1 {
                -syl.clone()
            } else {
                syl.clone()
            };
            assert_eq!(rev, expect);
        }
    }

    #[test]
    fn resultant_with_rational_coefficients() {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let f = Poly::new(vec![half, Rat::one()]); // x + 1/2
        let g = p(&[-1, 1]); // x − 1
                             // Res = g(−1/2) = −3/2
        assert_eq!(
            resultant(&f, &g).unwrap(),
            Rat::new(BigInt::from(-3), BigInt::from(2))
        );
    }

    #[test]
    fn composed_sum_of_linears() {
        // (x−a) ⊕ (x−b) = x − (a+b)
        let f = p(&[-3, 1]);
        let g = p(&[-4, 1]);
        assert_eq!(composed_sum(&f, &g).unwrap(), p(&[-7, 1]));
    }

    #[test]
    fn composed_sum_sqrt2_sqrt3() {
        // roots ±√2 ± √3 → x⁴ − 10x² + 1
        let f = p(&[-2, 0, 1]);
        let g = p(&[-3, 0, 1]);
        assert_eq!(composed_sum(&f, &g).unwrap(), p(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn composed_sum_matches_brute_force_on_rational_roots() {
        // all-rational roots oracle: expand ∏ (x − (a+b)) directly
        let roots_f = [1i64, -2, 5];
        let roots_g = [3i64, 4];
        let mut f = Poly::one();
        for r in roots_f {
            f = &f * &p(&[-r, 1]);
        }
        let mut g = Poly::one();
        for r in roots_g {
            g = &g * &p(&[-r, 1]);
        }
        let mut expect = Poly::one();
        for a in roots_f {
            for b in roots_g {
                expect = &expect * &p(&[-(a + b), 1]);
            }
        }
        assert_eq!(composed_sum(&f, &g).unwrap(), expect);
    }

    #[test]
    fn composed_sum_degree_contract() {
        let f = p(&[2, 0, 3, 1]);
        let g = p(&[-1, 7, 0, 0, 1]);
        let cs = composed_sum(&f, &g).unwrap();
        assert_eq!(cs.degree(), f.degree() * g.degree());
        assert!(cs.is_monic());
        assert_eq!(composed_sum(&p(&[1, 2]), &g), Err(ExactError::NonMonic));
    }

    #[test]
    fn sqrt_examples() {
        let h = p(&[1, 1, 1]);
        assert_eq!(poly_exact_sqrt(&(&h * &h)).unwrap(), h);
        assert_eq!(poly_exact_sqrt(&p(&[1, 0, 1])), None);
        // x⁴ − 10x² + 1 is irreducible, hence not a square
        assert_eq!(poly_exact_sqrt(&p(&[1, 0, -10, 0, 1])), None);
        assert_eq!(poly_exact_sqrt(&p(&[1])), Some(Poly::one()));
        assert_eq!(poly_exact_sqrt(&p(&[0, 1])), None);
    }

    #[test]
    fn sqrt_round_trip_larger() {
        let h = p(&[-3, 5, 0, -1, 2, 1]);
        let sq = &h * &h;
        assert_eq!(poly_exact_sqrt(&sq).unwrap(), h.make_monic());
    }
}
