//! Deterministic instance generation: seeded random multisegments and
//! exhaustive enumeration of the bounded universe used by the verification
//! campaigns.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::core::{Multisegment, Segment};
use crate::error::Error;

/// Bounds for generated instances. `window` limits endpoints inclusively,
/// `max_segments` the number of segments, `max_multiplicity` the repeats
/// of any single value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenParams {
    pub window: (i32, i32),
    pub max_segments: u32,
    pub max_multiplicity: u32,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { window: (0, 3), max_segments: 3, max_multiplicity: 2, seed: 0 }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<(), Error> {
        let (lo, hi) = self.window;
        if lo > hi {
            return Err(Error::BadWindow { lo: i64::from(lo), hi: i64::from(hi) });
        }
        Segment::new(lo, hi)?;
        if self.max_segments == 0 || self.max_multiplicity == 0 {
            return Err(Error::BadGenParams);
        }
        Ok(())
    }

    /// The seeded generator all derived draws start from.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// All segments with endpoints inside the window, in canonical order.
pub fn segments_in_window(lo: i32, hi: i32) -> Result<Vec<Segment>, Error> {
    if lo > hi {
        return Err(Error::BadWindow { lo: i64::from(lo), hi: i64::from(hi) });
    }
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in a..=hi {
            out.push(Segment::new(a, b)?);
        }
    }
    Ok(out)
}

/// One random multisegment from the params' own seed.
pub fn gen_multisegment(p: &GenParams) -> Result<Multisegment, Error> {
    p.validate()?;
    Ok(gen_from_rng(p, &mut p.rng()))
}

/// One random multisegment from an external generator stream: segment
/// count uniform in `0..=max_segments`, endpoints uniform in the window.
/// A draw that would breach the multiplicity cap is retried a bounded
/// number of times and then dropped, so the count cap is an upper bound.
pub fn gen_from_rng(p: &GenParams, rng: &mut impl Rng) -> Multisegment {
    let k = rng.gen_range(0..=p.max_segments);
    let mut out = Multisegment::new();
    for _ in 0..k {
        for _attempt in 0..16 {
            let a = rng.gen_range(p.window.0..=p.window.1);
            let b = rng.gen_range(a..=p.window.1);
            let s = Segment::new(a, b).expect("window endpoints are validated");
            if out.multiplicity(s) < p.max_multiplicity as usize {
                out.insert(s);
                break;
            }
        }
    }
    out
}

/// Every multisegment within the caps, in a deterministic order. The
/// default bounds give a universe of 276 elements.
pub fn enumerate_universe(p: &GenParams) -> Result<Vec<Multisegment>, Error> {
    p.validate()?;
    let pool = segments_in_window(p.window.0, p.window.1)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    universe_rec(&pool, 0, p, &mut stack, &mut out);
    Ok(out)
}

fn universe_rec(
    pool: &[Segment],
    start: usize,
    p: &GenParams,
    stack: &mut Vec<Segment>,
    out: &mut Vec<Multisegment>,
) {
    out.push(Multisegment::from_segments(stack.clone()));
    if stack.len() == p.max_segments as usize {
        return;
    }
    for i in start..pool.len() {
        let mult = stack.iter().filter(|s| **s == pool[i]).count();
        if mult < p.max_multiplicity as usize {
            stack.push(pool[i]);
            universe_rec(pool, i, p, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GenParams::default().validate().is_ok());
        assert!(GenParams { window: (3, 1), ..GenParams::default() }.validate().is_err());
        assert!(GenParams { max_segments: 0, ..GenParams::default() }.validate().is_err());
        assert!(GenParams { max_multiplicity: 0, ..GenParams::default() }.validate().is_err());
    }

    #[test]
    fn determinism() {
        let draws = |seed: u64| -> Vec<Multisegment> {
            let p = GenParams { seed, ..GenParams::default() };
            let mut rng = p.rng();
            (0..10).map(|_| gen_from_rng(&p, &mut rng)).collect()
        };
        assert_eq!(draws(7), draws(7));
        assert_ne!(draws(7), draws(8));
    }

    #[test]
    fn caps_respected() {
        let p = GenParams { window: (0, 2), max_segments: 4, max_multiplicity: 1, seed: 3 };
        let mut rng = p.rng();
        for _ in 0..10_000 {
            let m = gen_from_rng(&p, &mut rng);
            assert!(m.len() <= 4);
            for s in m.iter() {
                assert!(m.multiplicity(*s) <= 1);
                assert!(0 <= s.a() && s.b() <= 2);
            }
        }
    }

    #[test]
    fn degenerate_window() {
        let p = GenParams { window: (0, 0), max_segments: 2, max_multiplicity: 2, seed: 1 };
        let mut rng = p.rng();
        for _ in 0..50 {
            let m = gen_from_rng(&p, &mut rng);
            for s in m.iter() {
                assert_eq!((s.a(), s.b()), (0, 0));
            }
        }
        let u = enumerate_universe(&p).unwrap();
        assert_eq!(u.len(), 3);
    }

    #[test]
    fn universe_size() {
        assert_eq!(enumerate_universe(&GenParams::default()).unwrap().len(), 276);
        let u = enumerate_universe(&GenParams::default()).unwrap();
        let distinct: std::collections::BTreeSet<_> = u.iter().cloned().collect();
        assert_eq!(distinct.len(), u.len());
    }

    #[test]
    fn window_segments() {
        assert_eq!(segments_in_window(0, 3).unwrap().len(), 10);
        assert_eq!(segments_in_window(2, 2).unwrap().len(), 1);
        assert!(segments_in_window(2, 1).is_err());
    }
}
