//! Lyndon words and their standard factorization.

use std::cmp::Ordering;

use crate::algebra::Word;

/// `w` is Lyndon when it is nonempty and strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length `1..=max_len` over `letters` letters, ordered by
/// length and then lexicographically.
pub fn lyndon_words(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if letters == 0 || max_len == 0 {
        return out;
    }
    // Duval's generation in lexicographic order.
    let k = letters as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out.sort_by(|a, b| cmp_len_lex(a, b));
    out
}

pub fn cmp_len_lex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
/// Returns `None` for single letters.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .map(|i| (&w[..i], &w[i..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn necklace_count(k: usize, n: usize) -> usize {
        // Witt's formula: (1/n) sum_{d | n} mu(d) k^{n/d}
        fn mobius(mut n: usize) -> i64 {
            let mut r = 1;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    n /= p;
                    if n % p == 0 {
                        return 0;
                    }
                    r = -r;
                }
                p += 1;
            }
            if n > 1 {
                r = -r;
            }
            r
        }
        let mut s: i64 = 0;
        for d in 1..=n {
            if n % d == 0 {
                s += mobius(d) * (k as i64).pow((n / d) as u32);
            }
        }
        (s / n as i64) as usize
    }

    #[test]
    fn counts_follow_witt() {
        for k in 2..=3 {
            let words = lyndon_words(k, 7);
            for n in 1..=7 {
                let got = words.iter().filter(|w| w.len() == n).count();
                assert_eq!(got, necklace_count(k, n), "k={k} n={n}");
            }
            assert!(words.iter().all(|w| is_lyndon(w)));
        }
    }

    #[test]
    fn factorizations() {
        // XXYY = X . XYY, XYY = XY . Y
        assert_eq!(
            standard_factorization(&[0, 0, 1, 1]),
            Some((&[0u8][..], &[0u8, 1, 1][..]))
        );
        assert_eq!(
            standard_factorization(&[0, 1, 1]),
            Some((&[0u8, 1][..], &[1u8][..]))
        );
        assert_eq!(standard_factorization(&[0]), None);
    }
}
