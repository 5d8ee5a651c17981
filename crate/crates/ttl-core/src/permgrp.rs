//! Brute-force permutation-action oracle: group closure by breadth-first
//! enumeration, orbits on points, unordered 2-subsets, and ordered pairs.
//!
//! This is the ground truth the resolvent verdicts are validated against, so
//! it stays deliberately simple: full element materialization, no stabilizer
//! chains.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::exact::primes::is_prime;

/// Default closure bound: 10!.
pub const DEFAULT_MAX_ORDER: usize = 3_628_800;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images are not a bijection on 0..{0}")]
    NotBijective(usize),
    #[error("permutations act on different point counts")]
    MixedDegrees,
    #[error("group order exceeds the bound {0}")]
    OrderBoundExceeded(usize),
    #[error("group is not closed (no materialized elements)")]
    NotClosed,
    #[error("bad modulus {0}: need a prime congruent to 3 mod 4")]
    BadModulus(u64),
    #[error("cycle notation parse error at byte {position}: {message}")]
    CycleParse { position: usize, message: String },
}

/// A permutation of {0, …, n−1}, stored as the image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijective(n));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// self ∘ other: first other, then self.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "mixed degrees");
        Perm {
            images: (0..self.n())
                .map(|i| self.images[other.images[i]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Parses cycle notation like "(0 1 2)(3 4)" on n points; "()" is the
    /// identity. Commas are accepted as separators inside cycles.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut moved = vec![false; n];
        while pos < bytes.len() {
            let c = bytes[pos] as char;
            if c.is_whitespace() {
                pos += 1;
                continue;
            }
            if c != '(' {
                return Err(PermError::CycleParse {
                    position: pos,
                    message: format!("expected '(' but found {c:?}"),
                });
            }
            pos += 1;
            let mut cycle: Vec<usize> = vec![];
            let mut num = String::new();
            loop {
                if pos >= bytes.len() {
                    return Err(PermError::CycleParse {
                        position: pos,
                        message: "unterminated cycle".into(),
                    });
                }
                let c = bytes[pos] as char;
                if c.is_ascii_digit() {
                    num.push(c);
                    pos += 1;
                } else if c.is_whitespace() || c == ',' || c == ')' {
                    if !num.is_empty() {
                        let pt: usize = num.parse().map_err(|_| PermError::CycleParse {
                            position: pos,
                            message: "bad point number".into(),
                        })?;
                        if pt >= n {
                            return Err(PermError::CycleParse {
                                position: pos,
                                message: format!("point {pt} out of range 0..{n}"),
                            });
                        }
                        if moved[pt] {
                            return Err(PermError::CycleParse {
                                position: pos,
                                message: format!("point {pt} appears twice"),
                            });
                        }
                        moved[pt] = true;
                        cycle.push(pt);
                        num.clear();
                    }
                    pos += 1;
                    if c == ')' {
                        break;
                    }
                } else {
                    return Err(PermError::CycleParse {
                        position: pos,
                        message: format!("unexpected character {c:?}"),
                    });
                }
            }
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Cycle-notation rendering; fixed points are omitted, identity is "()".
    pub fn cycle_string(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// A permutation group with its closure materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_closed(&self) -> bool {
        !self.elements.is_empty()
    }
}

/// Materializes the closure of the generators by breadth-first products.
pub fn group_closure(generators: &[Perm], max_order: usize) -> Result<PermGroup, PermError> {
    let n = match generators.first() {
        Some(g) => g.n(),
        None => return Err(PermError::MixedDegrees),
    };
    if generators.iter().any(|g| g.n() != n) {
        return Err(PermError::MixedDegrees);
    }
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue: VecDeque<Perm> = VecDeque::new();
    let id = Perm::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(el) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&el);
            if !seen.contains(&next) {
                if seen.len() >= max_order {
                    return Err(PermError::OrderBoundExceeded(max_order));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroup {
        n,
        generators: generators.to_vec(),
        elements,
    })
}

/// The affine maps x ↦ ax + b on F_q with a in the index-2 subgroup of
/// squares; q must be a prime congruent to 3 mod 4, so the subgroup has odd
/// order (q−1)/2 and the group order is q(q−1)/2.
pub fn affine_half_group(q: u64) -> Result<PermGroup, PermError> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(PermError::BadModulus(q));
    }
    let n = q as usize;
    let squares: HashSet<u64> = (1..q).map(|x| (x * x) % q).collect();
    let mut elements = Vec::with_capacity(n * squares.len());
    for &a in &squares {
        for b in 0..q {
            let images = (0..q).map(|x| ((a * x + b) % q) as usize).collect();
            elements.push(Perm { images });
        }
    }
    elements.sort();
    // generators: translation x+1 and scaling by a generator of the squares
    let mut generators = vec![Perm {
        images: (0..q).map(|x| ((x + 1) % q) as usize).collect(),
    }];
    if q > 3 {
        let h = (2..q)
            .find(|&a| squares.contains(&a) && multiplicative_order(a, q) == (q - 1) / 2)
            .expect("squares form a cyclic group");
        generators.push(Perm {
            images: (0..q).map(|x| ((h * x) % q) as usize).collect(),
        });
    }
    debug_assert_eq!(elements.len(), (q * (q - 1) / 2) as usize);
    Ok(PermGroup {
        n,
        generators,
        elements,
    })
}

fn multiplicative_order(a: u64, q: u64) -> u64 {
    let mut x = a % q;
    let mut ord = 1;
    while x != 1 {
        x = (x * a) % q;
        ord += 1;
    }
    ord
}

/// Orbit partition of `points` items under the maps induced by the group
/// generators; returns orbit sizes in discovery order (smallest item first).
fn orbits<F>(count: usize, generators: &[Perm], act: F) -> Vec<Vec<usize>>
where
    F: Fn(&Perm, usize) -> usize,
{
    let mut assigned = vec![false; count];
    let mut out = vec![];
    for start in 0..count {
        if assigned[start] {
            continue;
        }
        let mut orbit = vec![start];
        assigned[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(item) = queue.pop_front() {
            for g in generators {
                let next = act(g, item);
                if !assigned[next] {
                    assigned[next] = true;
                    orbit.push(next);
                    queue.push_back(next);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// How primitivity was (or was not) settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimitivityWitness {
    /// Transitive on 2-subsets, hence primitive.
    ByAlmostDoubleTransitivity,
    Undetermined,
}

impl fmt::Display for PrimitivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimitivityWitness::ByAlmostDoubleTransitivity => {
                write!(f, "yes-by-almost-2-transitivity")
            }
            PrimitivityWitness::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// Orbit counts on points, unordered 2-subsets, and ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityProfile {
    pub order: usize,
    pub transitive: bool,
    pub two_set_transitive: bool,
    pub two_transitive: bool,
    pub primitive_witness: PrimitivityWitness,
    pub point_orbit_sizes: Vec<usize>,
    pub two_set_orbit_sizes: Vec<usize>,
    pub ordered_pair_orbit_sizes: Vec<usize>,
}

/// All unordered pairs {i, j}, i < j, in lexicographic order.
pub fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = vec![];
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Computes the orbit partitions driving the transitivity verdicts.
pub fn transitivity_profile(group: &PermGroup) -> Result<TransitivityProfile, PermError> {
    if !group.is_closed() {
        return Err(PermError::NotClosed);
    }
    let n = group.n;
    let gens: &[Perm] = if group.generators.is_empty() {
        &group.elements
    } else {
        &group.generators
    };

    let point_orbits = orbits(n, gens, |g, p| g.apply(p));
    let transitive = point_orbits.len() == 1;

    let pairs = unordered_pairs(n);
    let pair_index: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &pr)| (pr, k)).collect();
    let pair_orbits = orbits(pairs.len(), gens, |g, k| {
        let (i, j) = pairs[k];
        let (a, b) = (g.apply(i), g.apply(j));
        pair_index[&(a.min(b), a.max(b))]
    });
    let two_set_transitive = transitive && pair_orbits.len() == 1;

    let mut ordered = vec![];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                ordered.push((i, j));
            }
        }
    }
    let ordered_index: std::collections::HashMap<(usize, usize), usize> =
        ordered.iter().enumerate().map(|(k, &pr)| (pr, k)).collect();
    let ordered_orbits = orbits(ordered.len(), gens, |g, k| {
        let (i, j) = ordered[k];
        ordered_index[&(g.apply(i), g.apply(j))]
    });
    let two_transitive = transitive && ordered_orbits.len() == 1;

    let primitive_witness = if two_set_transitive {
        PrimitivityWitness::ByAlmostDoubleTransitivity
    } else {
        PrimitivityWitness::Undetermined
    };

    Ok(TransitivityProfile {
        order: group.order(),
        transitive,
        two_set_transitive,
        two_transitive,
        primitive_witness,
        point_orbit_sizes: point_orbits.iter().map(|o| o.len()).collect(),
        two_set_orbit_sizes: pair_orbits.iter().map(|o| o.len()).collect(),
        ordered_pair_orbit_sizes: ordered_orbits.iter().map(|o| o.len()).collect(),
    })
}

/// Orbit index sets on unordered 2-subsets, in discovery order. Used by the
/// H² decomposition, which needs the orbits themselves and not just sizes.
pub fn two_subset_orbits(group: &PermGroup) -> Result<Vec<Vec<(usize, usize)>>, PermError> {
    if !group.is_closed() {
        return Err(PermError::NotClosed);
    }
    let gens: &[Perm] = if group.generators.is_empty() {
        &group.elements
    } else {
        &group.generators
    };
    let pairs = unordered_pairs(group.n);
    let pair_index: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &pr)| (pr, k)).collect();
    let orb = orbits(pairs.len(), gens, |g, k| {
        let (i, j) = pairs[k];
        let (a, b) = (g.apply(i), g.apply(j));
        pair_index[&(a.min(b), a.max(b))]
    });
    Ok(orb
        .into_iter()
        .map(|o| o.into_iter().map(|k| pairs[k]).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn closure_of_s3() {
        let g = group_closure(&[perm(&[1, 0, 2]), perm(&[1, 2, 0])], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn closure_of_cyclic_4() {
        let g = group_closure(&[perm(&[1, 2, 3, 0])], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn order_bound_respected() {
        let r = group_closure(&[perm(&[1, 0, 2]), perm(&[1, 2, 0])], 5);
        assert!(matches!(r, Err(PermError::OrderBoundExceeded(5))));
    }

    #[test]
    fn affine_orders() {
        assert_eq!(affine_half_group(3).unwrap().order(), 3);
        assert_eq!(affine_half_group(7).unwrap().order(), 21);
        assert_eq!(affine_half_group(11).unwrap().order(), 55);
        assert_eq!(affine_half_group(5), Err(PermError::BadModulus(5)));
        assert_eq!(affine_half_group(9), Err(PermError::BadModulus(9)));
    }

    #[test]
    fn affine_generators_close_to_same_group() {
        for q in [3u64, 7, 11] {
            let g = affine_half_group(q).unwrap();
            let closed = group_closure(g.generators(), DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(closed.order(), g.order());
            assert_eq!(closed.elements(), g.elements());
        }
    }

    #[test]
    fn affine_7_separates_the_two_pair_notions() {
        let g = affine_half_group(7).unwrap();
        let p = transitivity_profile(&g).unwrap();
        assert!(p.transitive);
        assert!(p.two_set_transitive);
        assert!(!p.two_transitive);
        assert_eq!(p.two_set_orbit_sizes, vec![21]);
        assert_eq!(p.ordered_pair_orbit_sizes, vec![21, 21]);
        assert_eq!(
            p.primitive_witness,
            PrimitivityWitness::ByAlmostDoubleTransitivity
        );
    }

    #[test]
    fn s3_is_two_transitive() {
        let g = group_closure(&[perm(&[1, 0, 2]), perm(&[1, 2, 0])], DEFAULT_MAX_ORDER).unwrap();
        let p = transitivity_profile(&g).unwrap();
        assert!(p.transitive && p.two_set_transitive && p.two_transitive);
    }

    #[test]
    fn cyclic_4_two_subset_orbits() {
        let g = group_closure(&[perm(&[1, 2, 3, 0])], DEFAULT_MAX_ORDER).unwrap();
        let p = transitivity_profile(&g).unwrap();
        assert!(p.transitive);
        assert!(!p.two_set_transitive);
        let mut sizes = p.two_set_orbit_sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn orbit_sizes_divide_order_and_sum_correctly() {
        for gens in [
            vec![perm(&[1, 0, 2, 3]), perm(&[0, 2, 1, 3])],
            vec![perm(&[1, 2, 3, 4, 0])],
            vec![perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])],
        ] {
            let g = group_closure(&gens, DEFAULT_MAX_ORDER).unwrap();
            let n = g.n();
            let p = transitivity_profile(&g).unwrap();
            for &s in p
                .point_orbit_sizes
                .iter()
                .chain(&p.two_set_orbit_sizes)
                .chain(&p.ordered_pair_orbit_sizes)
            {
                assert_eq!(p.order % s, 0, "orbit size must divide order");
            }
            assert_eq!(p.two_set_orbit_sizes.iter().sum::<usize>(), n * (n - 1) / 2);
            assert_eq!(
                p.ordered_pair_orbit_sizes.iter().sum::<usize>(),
                n * (n - 1)
            );
        }
    }

    #[test]
    fn two_transitive_implies_two_set_transitive_on_samples() {
        // doubly transitive always implies 2-subset transitive
        let samples = vec![
            vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])],
            vec![perm(&[1, 2, 3, 0]), perm(&[1, 0, 3, 2])],
            vec![perm(&[1, 2, 3, 4, 0]), perm(&[0, 2, 4, 1, 3])],
        ];
        for gens in samples {
            let g = group_closure(&gens, DEFAULT_MAX_ORDER).unwrap();
            let p = transitivity_profile(&g).unwrap();
            if p.two_transitive {
                assert!(p.two_set_transitive);
            }
        }
    }

    #[test]
    fn transitive_on_three_points_is_two_set_transitive() {
        let c3 = group_closure(&[perm(&[1, 2, 0])], DEFAULT_MAX_ORDER).unwrap();
        let p = transitivity_profile(&c3).unwrap();
        assert!(p.transitive);
        assert!(p.two_set_transitive);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::parse_cycles("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.cycle_string(), "(0 1 2)(3 4)");
        let id = Perm::parse_cycles("()", 4).unwrap();
        assert!(id.is_identity());
        assert!(Perm::parse_cycles("(0 1", 3).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1)(1 2)", 3).is_err());
    }
}
