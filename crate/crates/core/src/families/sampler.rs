//! Seeded sampling of admissible parameter points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    AwParams, BigQParams, CqJacobiParams, CqUltraParams, FamilyKind, FamilySpec, JacobiParams, QJacobiEmbedding,
};
use crate::error::{Error, Result};
use crate::exact_algebra::{rat, Scalar};

/// Largest denominator used for sampled rationals.
const MAX_DEN: i64 = 7;
/// Rejection attempts per requested sample before giving up.
const MAX_TRIES: usize = 500;

fn unit_interval(rng: &mut ChaCha8Rng) -> Scalar {
    let den = rng.gen_range(2..=MAX_DEN);
    rat(rng.gen_range(1..den), den)
}

fn signed_unit(rng: &mut ChaCha8Rng) -> Scalar {
    let v = unit_interval(rng);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// A rational in `(-1, 3)` with denominator at most 4.
fn jacobi_exponent(rng: &mut ChaCha8Rng) -> Scalar {
    let den = rng.gen_range(1..=4);
    rat(rng.gen_range(-den + 1..3 * den), den)
}

/// A half-integer in `{0, 1/2, 1, 3/2, 2}`.
fn half_integer(rng: &mut ChaCha8Rng) -> Scalar {
    rat(rng.gen_range(0..=4), 2)
}

/// Base scale for the continuous q-Jacobi family, kept coarse because it is
/// raised to the fourth power.
fn coarse_scale(rng: &mut ChaCha8Rng) -> Scalar {
    let den = rng.gen_range(2..=4);
    rat(rng.gen_range(1..den), den)
}

fn draw(kind: FamilyKind, rng: &mut ChaCha8Rng) -> FamilySpec {
    match kind {
        FamilyKind::AskeyWilson => FamilySpec::AskeyWilson(AwParams::new(
            signed_unit(rng),
            signed_unit(rng),
            signed_unit(rng),
            signed_unit(rng),
            unit_interval(rng),
        )),
        FamilyKind::Jacobi => FamilySpec::Jacobi(JacobiParams::new(jacobi_exponent(rng), jacobi_exponent(rng))),
        FamilyKind::CqJacobiHalf | FamilyKind::CqJacobiFull => {
            let e = if kind == FamilyKind::CqJacobiHalf {
                QJacobiEmbedding::HalfBase
            } else {
                QJacobiEmbedding::FullBase
            };
            FamilySpec::CqJacobi(CqJacobiParams::new(half_integer(rng), half_integer(rng), coarse_scale(rng), e))
        }
        FamilyKind::CqUltra => FamilySpec::CqUltra(CqUltraParams::new(signed_unit(rng), unit_interval(rng))),
        FamilyKind::BigQJacobi => FamilySpec::BigQJacobi(BigQParams::new(
            signed_unit(rng),
            signed_unit(rng),
            signed_unit(rng),
            unit_interval(rng),
        )),
    }
}

/// `count` distinct admissible parameter points for `kind`, deterministic in
/// `seed`. Every point passes [`FamilySpec::check_admissible`] at `cap`.
pub fn sample_specs(kind: FamilyKind, count: usize, seed: u64, cap: usize) -> Result<Vec<FamilySpec>> {
    let stream = FamilyKind::ALL.iter().position(|k| *k == kind).unwrap() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut out: Vec<FamilySpec> = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > MAX_TRIES * count.max(1) {
            return Err(Error::Inadmissible(format!("could not find {count} admissible samples for {kind}")));
        }
        let spec = draw(kind, &mut rng);
        if out.contains(&spec) || spec.check_admissible(cap).is_err() {
            continue;
        }
        out.push(spec);
    }
    Ok(out)
}
