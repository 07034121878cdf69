//! Globally adaptive 7/15-point Gauss-Kronrod quadrature.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (i, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let pair = f(center - half * x) + f(center + half * x);
        kronrod += w * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    Segment {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Integrates `f` over `[lo, hi]`, bisecting the worst segment until the summed
/// error estimate drops below `tolerance`. Fails once `max_segments` is reached.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tolerance: f64,
    max_segments: usize,
) -> Result<f64> {
    if lo == hi {
        return Ok(0.0);
    }
    let mut segments = vec![gk15(&f, lo, hi)];
    loop {
        let error: f64 = segments.iter().map(|s| s.error).sum();
        if error <= tolerance {
            return Ok(segments.iter().map(|s| s.value).sum());
        }
        if segments.len() >= max_segments || !error.is_finite() {
            return Err(Error::NonConvergence {
                intervals: segments.len(),
                estimate: error,
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .map(|(i, _)| i)
            .expect("nonempty");
        let s = segments.swap_remove(worst);
        let mid = 0.5 * (s.lo + s.hi);
        if mid <= s.lo || mid >= s.hi {
            // segment can no longer be split in f64
            return Err(Error::NonConvergence {
                intervals: segments.len() + 1,
                estimate: error,
            });
        }
        segments.push(gk15(&f, s.lo, mid));
        segments.push(gk15(&f, mid, s.hi));
    }
}
