//! Special functions and quadrature kernels shared by the rest of the crate.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Value of an integral or truncated sum together with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error: f64,
}

/// Second derivative of the digamma function, psi''(a), for a > 0.
///
/// Upward recurrence psi''(a+1) = psi''(a) + 2/a^3 pushes the argument to
/// a >= 12 where the asymptotic series converges to full double precision.
pub fn polygamma2(a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!(
            "polygamma2 requires a > 0, got {a}"
        )));
    }
    let mut x = a;
    let mut acc = 0.0;
    while x < 12.0 {
        acc -= 2.0 / (x * x * x);
        x += 1.0;
    }
    // psi''(x) = -1/x^2 - 1/x^3 - sum_k B_{2k} (2k+1) / x^{2k+2}
    const B2K_2KP1: [f64; 7] = [
        // B_{2k} * (2k+1) for k = 1..7
        0.5,                      // (1/6)*3
        -1.0 / 6.0,               // (-1/30)*5
        1.0 / 6.0,                // (1/42)*7
        -3.0 / 10.0,              // (-1/30)*9
        5.0 / 6.0,                // (5/66)*11
        -691.0 / 210.0,           // (-691/2730)*13
        17.5,                     // (7/6)*15
    ];
    let inv2 = 1.0 / (x * x);
    let mut term = inv2; // running power x^{-2k-2}, starting below at x^{-4}
    let mut sum = inv2 + inv2 / x; // 1/x^2 + 1/x^3
    for c in B2K_2KP1 {
        term *= inv2;
        sum += c * term;
    }
    Ok(acc - sum)
}

/// Tail of the inverse-cube series: sum_{k=k_start}^inf 1/(k+a)^3.
///
/// Evaluated as -psi''(a + k_start)/2.
pub fn sum_tail_cubes(a: f64, k_start: u32) -> Result<f64> {
    let shifted = a + k_start as f64;
    if !(shifted > 0.0) {
        return Err(Error::domain(format!(
            "sum_tail_cubes requires a + k_start > 0, got {shifted}"
        )));
    }
    Ok(-0.5 * polygamma2(shifted)?)
}

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule, on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_93,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kron = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (fl, fr) = if x == 0.0 {
            let v = f(c);
            (v, 0.0)
        } else {
            (f(c - h * x), f(c + h * x))
        };
        kron += wk * (fl + fr);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (fl + fr);
        } else if x == 0.0 {
            gauss += WG[3] * fl;
        }
    }
    let kron = kron * h;
    let gauss = gauss * h;
    (kron, (kron - gauss).abs())
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

/// Adaptive Gauss–Kronrod quadrature over [lower, upper].
///
/// `upper` may be `f64::INFINITY`; the semi-infinite part is mapped to a
/// finite interval with x = t/(1-t). Breakpoints split the initial panels
/// (integrable features should sit on a breakpoint).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lower: f64,
    upper: f64,
    breakpoints: &[f64],
) -> Result<QuadratureResult> {
    const MAX_PANELS: usize = 10_000;
    const REL_TOL: f64 = 1e-9;

    let mut edges: Vec<f64> = vec![lower];
    for &b in breakpoints {
        if b > lower && (upper.is_infinite() || b < upper) {
            edges.push(b);
        }
    }
    edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
    edges.dedup();

    // Map the last segment to [0,1) when the upper limit is infinite.
    let last = *edges.last().unwrap();
    let mut panels: Vec<Panel> = Vec::new();
    let eval = |a: f64, b: f64, transformed: bool| -> Panel {
        let (v, e) = if transformed {
            let g = |t: f64| {
                let w = 1.0 - t;
                let x = last + t / w;
                f(x) / (w * w)
            };
            gk15(&g, a, b)
        } else {
            gk15(&f, a, b)
        };
        Panel {
            a: if transformed { f64::NAN } else { a },
            b: if transformed { b } else { b },
            value: v,
            err: e,
        }
    };

    // Finite panels between edges, plus one transformed panel for the tail.
    let mut work: Vec<(f64, f64, bool)> = Vec::new();
    for w in edges.windows(2) {
        work.push((w[0], w[1], false));
    }
    if upper.is_infinite() {
        work.push((0.0, 1.0, true));
    } else if last < upper {
        work.push((last, upper, false));
    }

    for &(a, b, tr) in &work {
        let mut p = eval(a, b, tr);
        p.a = a;
        panels.push(Panel { a, b, ..p });
        // remember transformed-ness via sign trick is fragile; store separately
    }
    // Track transformed flag alongside.
    let mut flags: Vec<bool> = work.iter().map(|w| w.2).collect();

    let mut n_evals = panels.len();
    loop {
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        let total_val: f64 = panels.iter().map(|p| p.value).sum();
        let tol = REL_TOL * total_val.abs().max(1e-300) + 1e-15;
        if total_err <= tol || n_evals >= MAX_PANELS {
            let result = QuadratureResult {
                value: total_val,
                abs_error: total_err.max(f64::EPSILON * total_val.abs()),
            };
            if total_err > tol && n_evals >= MAX_PANELS && total_err > 1e-6 * total_val.abs() {
                return Err(Error::Quadrature {
                    value: result.value,
                    abs_error: result.abs_error,
                });
            }
            return Ok(result);
        }
        // Split the worst panel.
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.err.partial_cmp(&b.1.err).unwrap())
            .unwrap();
        let p = panels.remove(idx);
        let tr = flags.remove(idx);
        let m = 0.5 * (p.a + p.b);
        for (a, b) in [(p.a, m), (m, p.b)] {
            let mut q = eval(a, b, tr);
            q.a = a;
            panels.push(Panel { a, b, ..q });
            flags.push(tr);
        }
        n_evals += 2;
    }
}
