//! Integer polynomial factorization: factor mod p, Hensel-lift past a
//! coefficient bound, recombine factor subsets (classical Zassenhaus).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{factor_modpoly, ModPoly};
use super::poly::{rat_big, Poly};
use super::primes::Primes;
use super::ExactError;

type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn deg(a: &ZPoly) -> usize {
    a.len().saturating_sub(1)
}

fn reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor(m));
    }
    trim(out)
}

fn sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor(m));
    }
    trim(out)
}

fn mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out.into_iter().map(|c| c.mod_floor(m)).collect())
}

/// Division by a monic divisor in (Z/m)[x].
fn divrem_monic_mod(a: &ZPoly, div: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(div.last().is_some_and(|c| c.is_one()));
    let dd = deg(div);
    if a.len() <= dd {
        return (vec![], a.clone());
    }
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for k in (dd..rem.len()).rev() {
        let q = rem[k].mod_floor(m);
        if q.is_zero() {
            continue;
        }
        for (i, c) in div.iter().enumerate() {
            let idx = k - dd + i;
            rem[idx] = (&rem[idx] - &q * c).mod_floor(m);
        }
        quot[k - dd] = q;
    }
    (trim(quot), trim(rem))
}

fn modpoly_to_z(f: &ModPoly) -> ZPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: lifts f ≡ g·h and the Bezout pair from
/// modulus m to m². All of f, g, h are monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g1 = add_mod(
        &add_mod(g, &mul_mod(t, &e, &m2), &m2),
        &mul_mod(&q, g, &m2),
        &m2,
    );
    let h1 = add_mod(h, &r, &m2);
    let one = vec![BigInt::one()];
    let b = sub_mod(
        &add_mod(&mul_mod(s, &g1, &m2), &mul_mod(t, &h1, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, &m2), &h1, &m2);
    let s1 = sub_mod(s, &d, &m2);
    let t1 = sub_mod(
        &sub_mod(t, &mul_mod(t, &b, &m2), &m2),
        &mul_mod(&c, &g1, &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lifts the factorization f ≡ ∏ factors (mod p) to mod p^(2^steps) by a
/// factor tree of two-way quadratic lifts. All polynomials monic.
fn hensel_lift_tree(f: &ZPoly, factors: &[ModPoly], p: u64, steps: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let modulus = BigInt::from(p).pow(1 << steps);
        return vec![reduce(f, &modulus)];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let pm = BigInt::from(p);
    let mut g: ZPoly = left.iter().fold(vec![BigInt::one()], |acc, x| {
        mul_mod(&acc, &modpoly_to_z(x), &pm)
    });
    let mut h: ZPoly = right.iter().fold(vec![BigInt::one()], |acc, x| {
        mul_mod(&acc, &modpoly_to_z(x), &pm)
    });
    // Bezout over F_p
    let gm = ModPoly::new(p, g.iter().map(|c| u64::try_from(c).unwrap()).collect()).unwrap();
    let hm = ModPoly::new(p, h.iter().map(|c| u64::try_from(c).unwrap()).collect()).unwrap();
    let (one, s0, t0) = gm.extended_gcd(&hm);
    debug_assert!(one.is_constant());
    let mut s = modpoly_to_z(&s0);
    let mut t = modpoly_to_z(&t0);
    let mut m = pm.clone();
    for _ in 0..steps {
        let (g1, h1, s1, t1) = hensel_step(&reduce(f, &(&m * &m)), &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = hensel_lift_tree(&g, left, p, steps);
    out.extend(hensel_lift_tree(&h, right, p, steps));
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Exact division over Z by a monic divisor; None when not divisible.
fn divide_exact_z(a: &ZPoly, div: &ZPoly) -> Option<ZPoly> {
    let dd = deg(div);
    if a.len() <= dd {
        return None;
    }
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for k in (dd..rem.len()).rev() {
        let q = rem[k].clone();
        if !q.is_zero() {
            for (i, c) in div.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = &rem[idx] - &q * c;
            }
        }
        quot[k - dd] = q;
    }
    if trim(rem).is_empty() {
        Some(trim(quot))
    } else {
        None
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Complete factorization of a squarefree rational polynomial into monic
/// irreducible factors over Q; the product of the outputs equals the input
/// divided by its leading coefficient.
pub fn factor_over_z(f: &Poly, degree_bound: usize) -> Result<Vec<Poly>, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if f.degree() > degree_bound {
        return Err(ExactError::DegreeBoundExceeded {
            degree: f.degree(),
            bound: degree_bound,
        });
    }
    if !f.is_squarefree() {
        return Err(ExactError::NotSquarefree);
    }
    if f.degree() == 0 {
        return Ok(vec![]);
    }
    if f.degree() == 1 {
        return Ok(vec![f.make_monic()]);
    }

    // integer model, content removed, positive leading coefficient
    let (mut fz, _) = f.to_integer_scaled();
    let cont = {
        let mut g = BigInt::zero();
        for c in &fz {
            g = g.gcd(c);
        }
        g
    };
    fz = fz.iter().map(|c| c / &cont).collect();
    if fz.last().unwrap().is_negative() {
        fz = fz.iter().map(|c| -c).collect();
    }
    let n = deg(&fz);
    let lead = fz[n].clone();

    // monicize through y = lead·x
    let mut mono = Vec::with_capacity(n + 1);
    for (i, c) in fz.iter().enumerate() {
        let mut v = c.clone();
        for _ in 0..(n - 1 - i.min(n - 1)) {
            v *= &lead;
        }
        if i == n {
            v = BigInt::one();
        }
        mono.push(v);
    }
    let mono = trim(mono);
    debug_assert_eq!(deg(&mono), n);

    // prime with squarefree reduction
    let mut chosen = None;
    for p in Primes::new().take(200) {
        let fp = ModPoly::new(
            p,
            mono.iter()
                .map(|c| {
                    let r = c.mod_floor(&BigInt::from(p));
                    u64::try_from(&r).unwrap()
                })
                .collect(),
        )?;
        if fp.degree() == n && fp.is_squarefree() {
            chosen = Some((p, fp));
            break;
        }
    }
    let (p, fp) = chosen.expect("squarefree reduction exists for squarefree input");

    let modular = factor_modpoly(&fp);
    debug_assert!(modular.factors.iter().all(|(_, m)| *m == 1));
    let mod_factors: Vec<ModPoly> = modular.factors.iter().map(|(g, _)| g.clone()).collect();

    if mod_factors.len() == 1 {
        return Ok(vec![f.make_monic()]);
    }

    // Mignotte-style bound: 2^deg · max|coeff| · (deg+1)
    let height = mono.iter().map(|c| c.abs()).max().unwrap();
    let bound = (BigInt::one() << n) * &height * BigInt::from((n + 1) as u64);
    let target = &bound * 2 + 1;
    let mut steps = 0u32;
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
        steps += 1;
    }

    let lifted = hensel_lift_tree(&reduce(&mono, &modulus), &mod_factors, p, steps);
    debug_assert_eq!(lifted.len(), mod_factors.len());

    // recombination
    let mut pool: Vec<ZPoly> = lifted;
    let mut remaining = mono.clone();
    let mut found: Vec<ZPoly> = vec![];
    let mut card = 1usize;
    'outer: while 2 * card <= pool.len() {
        let mut idx: Vec<usize> = (0..card).collect();
        loop {
            let mut cand = vec![BigInt::one()];
            for &i in &idx {
                cand = mul_mod(&cand, &pool[i], &modulus);
            }
            let cand: ZPoly = cand.iter().map(|c| symmetric(c, &modulus)).collect();
            if let Some(q) = divide_exact_z(&remaining, &cand) {
                remaining = q;
                found.push(cand);
                let mut keep = vec![];
                for (i, g) in pool.into_iter().enumerate() {
                    if !idx.contains(&i) {
                        keep.push(g);
                    }
                }
                pool = keep;
                continue 'outer;
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
        card += 1;
    }
    if deg(&remaining) > 0 {
        found.push(remaining);
    }

    // map back through x = y/lead and normalize monic over Q
    let mut out: Vec<Poly> = found
        .into_iter()
        .map(|g| {
            let mut coeffs = Vec::with_capacity(g.len());
            let mut power = BigInt::one();
            for c in g.iter() {
                coeffs.push(rat_big(c * &power));
                power *= &lead;
            }
            Poly::new(coeffs).make_monic()
        })
        .collect();
    out.sort_by(|a, b| {
        (a.degree(), a.coeffs().to_vec())
            .partial_cmp(&(b.degree(), b.coeffs().to_vec()))
            .unwrap()
    });
    Ok(out)
}
