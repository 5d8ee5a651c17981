//! Primality by trial division and a small prime iterator.
//!
//! Every modulus in this crate is desk-scale, so trial division up to the
//! square root is the whole story.

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Iterator over the primes 2, 3, 5, 7, ...
#[derive(Debug, Clone)]
pub struct Primes {
    next: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes { next: 2 }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let mut n = self.next;
        while !is_prime(n) {
            n += 1;
        }
        self.next = n + 1;
        Some(n)
    }
}
