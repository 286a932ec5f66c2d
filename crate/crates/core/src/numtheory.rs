//! Integer machinery: sieve, factorization, fourth-power-free decomposition
//! and sums of two squares.
//!
//! Everything here works on `u64`. For a domain bound `d ≤ 10⁶` every norm
//! is at most `2d² ≤ 2·10¹²`, well inside range.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Ascending primes `p ≤ limit`, by the sieve of Eratosthenes.
///
/// Returns an empty list when `limit < 2`. The number 1 is not prime.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("sieve limit exceeds address space");
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for r in 2..=limit {
        if composite[r] {
            continue;
        }
        primes.push(r as u64);
        let mut multiple = match r.checked_mul(r) {
            Some(sq) if sq <= limit => sq,
            _ => continue,
        };
        while multiple <= limit {
            composite[multiple] = true;
            multiple += r;
        }
    }
    primes
}

/// Prime factorization `n = ∏ pᵉ` with strictly increasing primes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Product of all prime powers.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Whether every exponent is at most 3.
    pub fn is_fourth_power_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e <= 3)
    }

    /// Number of divisors congruent to 1 and to 3 modulo 4.
    pub fn divisor_residue_counts(&self) -> (u64, u64) {
        let mut divisors: Vec<u64> = vec![1];
        for &(p, e) in &self.factors {
            let len = divisors.len();
            let mut power = 1u64;
            for _ in 0..e {
                power *= p;
                for i in 0..len {
                    divisors.push(divisors[i] * power);
                }
            }
        }
        divisors.iter().fold((0, 0), |(one, three), &d| match d % 4 {
            1 => (one + 1, three),
            3 => (one, three + 1),
            _ => (one, three),
        })
    }

    fn push(&mut self, p: u64, e: u32) {
        if e > 0 {
            self.factors.push((p, e));
        }
    }
}

/// Factorization by trial division with 2 and then odd candidates.
///
/// `factorize(1)` is the empty product. `factorize(0)` is also returned
/// empty; callers treat 0 as outside the domain.
pub fn factorize(n: u64) -> Factorization {
    let mut out = Factorization::default();
    if n <= 1 {
        return out;
    }
    let mut rest = n;
    let e = rest.trailing_zeros();
    rest >>= e;
    out.push(2, e);
    let mut p = 3u64;
    while p <= rest / p {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        out.push(p, e);
        p += 2;
    }
    if rest > 1 {
        out.push(rest, 1);
    }
    out
}

/// Sieved prime list used for repeated trial division.
///
/// Integers up to `limit²` are factored using only the sieved primes; larger
/// inputs fall back to odd trial division past the end of the table.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Sieve all primes up to `limit`.
    pub fn new(limit: u64) -> Self {
        PrimeTable {
            limit,
            primes: sieve_primes(limit),
        }
    }

    /// Table able to factor every integer up to `max_value` without fallback.
    pub fn for_values_up_to(max_value: u64) -> Self {
        Self::new(max_value.isqrt().max(2))
    }

    /// Sieved primes, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Factor `n` by trial division against the table.
    pub fn factorize(&self, n: u64) -> Factorization {
        let mut out = Factorization::default();
        if n <= 1 {
            return out;
        }
        let mut rest = n;
        for &p in &self.primes {
            if p > rest / p {
                break;
            }
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            out.push(p, e);
        }
        let mut p = (self.limit + 1) | 1;
        while p <= rest / p {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            out.push(p, e);
            p += 2;
        }
        if rest > 1 {
            out.push(rest, 1);
        }
        out
    }
}

/// Class index `q` and weight `γ` of a positive integer `n = γ⁴ q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexWeight {
    /// Fourth-power-free part; identifies the class.
    pub q: u64,
    /// Largest `γ` with `γ⁴ | n`.
    pub gamma: u64,
}

impl IndexWeight {
    /// The decomposed integer `γ⁴ q`.
    pub fn value(&self) -> u64 {
        self.gamma.pow(4) * self.q
    }
}

/// Split `n` into `γ⁴ q` with `q` fourth-power-free.
///
/// Only divisors `g` with `g⁴ ≤ n` can contribute to `γ`. Stripping `g⁴`
/// for every `g = 2, 3, 5, 7, 9, …` in turn removes each prime's fourth
/// powers exactly once: a composite `g` never divides what is left because
/// its prime factors were exhausted earlier.
pub fn fourth_free_decompose(n: u64) -> Result<IndexWeight> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut q = n;
    let mut gamma = 1u64;
    let mut g = 2u64;
    loop {
        let g4 = match g.checked_pow(4) {
            Some(v) if v <= q => v,
            _ => break,
        };
        while q % g4 == 0 {
            q /= g4;
            gamma *= g;
        }
        g = if g == 2 { 3 } else { g + 2 };
    }
    Ok(IndexWeight { q, gamma })
}

/// Euler's criterion: `n` is a sum of two squares iff every prime `≡ 3 (mod 4)`
/// occurs to an even power.
pub fn is_two_square_representable(n: u64) -> bool {
    factorize(n).factors().iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0)
}

/// Unordered representation `n = a² + b²` with `0 ≤ a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoSquareRep {
    /// smaller component
    pub a: u64,
    /// larger component
    pub b: u64,
}

impl TwoSquareRep {
    /// Number of signed, ordered pairs `(x, y)` this representation stands for.
    pub fn signed_multiplicity(&self) -> u64 {
        if self.a == 0 || self.a == self.b {
            4
        } else {
            8
        }
    }
}

/// All representations `n = a² + b²` with `0 ≤ a ≤ b`, ascending in `a`.
///
/// Scans `a` over `[0, ⌊√(n/2)⌋]` and tests `n − a²` for being a square. The
/// candidate root only ever decreases, so the scan is linear in `√n`.
pub fn two_square_reps(n: u64) -> Vec<TwoSquareRep> {
    let mut reps = Vec::new();
    if n == 0 {
        return reps;
    }
    let a_max = (n / 2).isqrt();
    let mut b = n.isqrt();
    for a in 0..=a_max {
        let rest = n - a * a;
        while b * b > rest {
            b -= 1;
        }
        if b * b == rest && a <= b {
            reps.push(TwoSquareRep { a, b });
        }
    }
    reps
}

/// Number of signed ordered pairs `(a, b) ∈ ℤ²` with `a² + b² = n`, computed
/// as `4·(d₁(n) − d₃(n))` from the divisors of `n`.
pub fn two_square_count_signed(n: u64) -> u64 {
    two_square_count_from(&factorize(n))
}

/// [`two_square_count_signed`] for an already factored integer.
pub fn two_square_count_from(factorization: &Factorization) -> u64 {
    let (one, three) = factorization.divisor_residue_counts();
    4 * (one - three)
}
