//! Arithmetic in a prime field `F_p` with `p < 2^63`.
//!
//! Elements are plain `u64` residues in `0..p`. Products go through a
//! widening `u128` multiply, so a single machine word suffices for every
//! operation.

use rand::Rng;
use thiserror::Error;

/// `2^62 - 57`, the largest prime below `2^62`.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large, need p < 2^63")]
    TooLarge(u64),
}

/// The prime field `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 63 {
            return Err(FieldError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        let r = (a as i128).rem_euclid(self.p as i128);
        r as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(1..self.p)
    }

    /// Checks the field axioms on a handful of sampled elements: inverses,
    /// distributivity, Fermat's little theorem and Euler's criterion. The
    /// last one also catches Carmichael moduli, which pass the first three.
    pub fn self_check<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> bool {
        for _ in 0..samples {
            let a = self.random_nonzero(rng);
            let b = self.random(rng);
            let c = self.random(rng);
            if self.mul(a, self.inv(a)) != 1 {
                return false;
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return false;
            }
            if self.pow(a, self.p - 1) != 1 {
                return false;
            }
            let e = self.pow(a, (self.p - 1) / 2);
            if self.p > 2 && e != 1 && e != self.p - 1 {
                return false;
            }
        }
        true
    }

    /// Builds a field without the primality check. Only for exercising the
    /// arithmetic self-check against a corrupted modulus.
    #[doc(hidden)]
    pub fn new_unchecked(p: u64) -> Self {
        Self { p }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &BASES {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_prime_is_prime_and_near_2_62() {
        assert!(is_prime(DEFAULT_PRIME));
        assert_eq!((1u64 << 62) - DEFAULT_PRIME, 57);
        for gap in 1..57 {
            assert!(!is_prime((1u64 << 62) - gap));
        }
    }

    #[test]
    fn small_primes_match_trial_division() {
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..2000 {
            assert_eq!(is_prime(n), naive(n), "n = {n}");
        }
        // Carmichael numbers
        for n in [561u64, 1105, 1729, 2465, 2821, 6601, 8911] {
            assert!(!is_prime(n));
        }
    }

    #[test]
    fn rejects_composite_and_oversized_moduli() {
        assert_eq!(PrimeField::new(15), Err(FieldError::NotPrime(15)));
        assert!(matches!(PrimeField::new(u64::MAX), Err(FieldError::TooLarge(_))));
    }

    #[test]
    fn inverse_and_negation() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.sub(3, 5), 99);
    }

    #[test]
    fn self_check_catches_composite_modulus() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert!(PrimeField::default().self_check(&mut rng, 64));
        let bad = PrimeField::new_unchecked(DEFAULT_PRIME - 1);
        assert!(!bad.self_check(&mut rng, 64));
    }

    #[test]
    fn self_check_catches_large_carmichael_modulus() {
        // Chernick form (6k+1)(12k+1)(18k+1) with three prime factors; all
        // factors are large, so random residues are almost never non-units.
        let k = (10_000u64..).find(|k| [6 * k + 1, 12 * k + 1, 18 * k + 1].iter().all(|&q| is_prime(q))).unwrap();
        let n = (6 * k + 1) * (12 * k + 1) * (18 * k + 1);
        assert!(!is_prime(n));
        let f = PrimeField::new_unchecked(n);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = f.random_nonzero(&mut rng);
        assert_eq!(f.pow(a, n - 1), 1, "Fermat alone is fooled");
        assert!(!f.self_check(&mut rng, 64));
    }
}
