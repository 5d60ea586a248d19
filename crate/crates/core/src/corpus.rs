//! Seeded generator of random Gizatullin pairs, used by tests and the CLI
//! round-trip suite.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dpd::{is_gizatullin, is_toric, DpdPair, QDivisor};
use crate::exactmath::Rational;

pub struct PairGenerator {
    rng: ChaCha8Rng,
    max_den: i64,
    max_points: usize,
}

impl PairGenerator {
    /// Denominators up to 8, at most 4 support points.
    pub fn new(seed: u64) -> PairGenerator {
        PairGenerator::with_limits(seed, 8, 4)
    }

    pub fn with_limits(seed: u64, max_den: i64, max_points: usize) -> PairGenerator {
        assert!(max_den >= 2 && max_points >= 1);
        PairGenerator { rng: ChaCha8Rng::seed_from_u64(seed), max_den, max_points }
    }

    fn fraction(&mut self) -> Rational {
        loop {
            let d = self.rng.gen_range(2..=self.max_den);
            let n = self.rng.gen_range(-2 * d..=2 * d);
            if n.gcd(&d) == 1 {
                return Rational::new(n, d);
            }
        }
    }

    fn point_pool(&mut self) -> Vec<Rational> {
        let mut pool: Vec<Rational> = (-4..=4).map(Rational::from_int).collect();
        pool.extend([Rational::new(1, 2), Rational::new(-1, 3), Rational::new(5, 2)]);
        pool.shuffle(&mut self.rng);
        pool
    }

    /// A Gizatullin pair; may be toric.
    pub fn next_pair(&mut self) -> DpdPair {
        loop {
            if let Some(p) = self.try_pair() {
                return p;
            }
        }
    }

    pub fn next_non_toric(&mut self) -> DpdPair {
        loop {
            let p = self.next_pair();
            if !is_toric(&p) {
                return p;
            }
        }
    }

    fn try_pair(&mut self) -> Option<DpdPair> {
        let k = self.rng.gen_range(1..=self.max_points);
        let points: Vec<Rational> = self.point_pool().into_iter().take(k).collect();
        let p_plus = self.rng.gen_bool(0.75).then(|| self.rng.gen_range(0..k));
        let p_minus = match self.rng.gen_range(0..4) {
            0 => None,
            1 => p_plus.or(Some(0)),
            _ => Some(self.rng.gen_range(0..k)),
        };
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (i, p) in points.iter().enumerate() {
            let a = if Some(i) == p_plus { self.fraction() } else { self.rng.gen_range(-3i64..=3).into() };
            let mut b = if Some(i) == p_minus { self.fraction() } else { self.rng.gen_range(-3i64..=3).into() };
            let s = &a + &b;
            if s.is_positive() {
                // integral shift keeps the fractional part
                let up = s.floor() + Rational::from_int(if s.is_integer() { 0 } else { 1 });
                b = &b - &up;
            }
            let extra = match self.rng.gen_range(0..6) {
                0 | 1 => 0,
                2 | 3 => 1,
                4 => 2,
                _ => 3,
            };
            b = &b - &Rational::from_int(extra);
            plus.push((p.clone(), a));
            minus.push((p.clone(), b));
        }
        let pair = DpdPair::new(QDivisor::new(plus).ok()?, QDivisor::new(minus).ok()?).ok()?;
        is_gizatullin(&pair).map(|_| pair)
    }
}
