//! Primality by trial division and a small sieve for sweep ranges.

use alloc::vec;
use alloc::vec::Vec;

/// Deterministic trial division up to `isqrt(n)`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in `lo..=hi`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let hi = hi as usize;
    let mut composite = vec![false; hi + 1];
    let mut out = Vec::new();
    for i in 2..=hi {
        if composite[i] {
            continue;
        }
        if i as u64 >= lo {
            out.push(i as u64);
        }
        let mut j = i * i;
        while j <= hi {
            composite[j] = true;
            j += i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(primes_in(0, 30), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_in(5, 5), [5]);
        assert!(primes_in(4, 3).is_empty());
        assert!(primes_in(24, 28).is_empty());
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let sieved = primes_in(0, 3000);
        let trial: Vec<u64> = (0..=3000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
        assert!(is_prime(65537));
        assert!(!is_prime(65537 * 3));
    }
}
