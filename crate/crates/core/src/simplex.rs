//! Two-parameter Nelder–Mead maximizer used to polish the measurement grid
//! search. Unbounded: the measurement objective is periodic in both angles.

/// Outcome of a simplex run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct SimplexResult {
    pub point: [f64; 2],
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;
/// Largest vertex distance from the best vertex accepted at convergence.
/// Equal values alone are not enough: vertices straddling a peak
/// symmetrically, or spread along a flat direction, tie without being at it.
const X_TOL: f64 = 1e-6;

/// Maximize `f` starting from `start` with initial edge lengths `steps`.
/// Stops when the spread of objective values across the simplex drops below
/// `tol` and the simplex has contracted to within [`X_TOL`], or after
/// `max_iter` iterations (reported as not converged).
pub(crate) fn maximize<F>(f: F, start: [f64; 2], steps: [f64; 2], tol: f64, max_iter: usize) -> SimplexResult
where
    F: Fn([f64; 2]) -> f64,
{
    // internally minimize -f
    let g = |x: [f64; 2]| -f(x);
    let mut verts = [
        start,
        [start[0] + steps[0], start[1]],
        [start[0], start[1] + steps[1]],
    ];
    let mut vals = verts.map(g);

    let mut iterations = 0;
    loop {
        sort(&mut verts, &mut vals);
        if vals[2] - vals[0] < tol && diameter(&verts) < X_TOL {
            return SimplexResult { point: verts[0], value: -vals[0], iterations, converged: true };
        }
        if iterations == max_iter {
            return SimplexResult { point: verts[0], value: -vals[0], iterations, converged: false };
        }
        iterations += 1;

        let centroid = [(verts[0][0] + verts[1][0]) / 2.0, (verts[0][1] + verts[1][1]) / 2.0];
        let along = |t: f64| {
            [
                centroid[0] + t * (verts[2][0] - centroid[0]),
                centroid[1] + t * (verts[2][1] - centroid[1]),
            ]
        };

        let xr = along(-REFLECT);
        let fr = g(xr);
        if fr < vals[0] {
            let xe = along(-REFLECT * EXPAND);
            let fe = g(xe);
            if fe < fr {
                verts[2] = xe;
                vals[2] = fe;
            } else {
                verts[2] = xr;
                vals[2] = fr;
            }
            continue;
        }
        if fr < vals[1] {
            verts[2] = xr;
            vals[2] = fr;
            continue;
        }
        let (xc, fc) = if fr < vals[2] {
            let x = along(-REFLECT * CONTRACT);
            (x, g(x))
        } else {
            let x = along(CONTRACT);
            (x, g(x))
        };
        if fc < vals[2].min(fr) {
            verts[2] = xc;
            vals[2] = fc;
            continue;
        }
        for k in 1..3 {
            verts[k] = [
                verts[0][0] + SHRINK * (verts[k][0] - verts[0][0]),
                verts[0][1] + SHRINK * (verts[k][1] - verts[0][1]),
            ];
            vals[k] = g(verts[k]);
        }
    }
}

fn diameter(verts: &[[f64; 2]; 3]) -> f64 {
    verts[1..]
        .iter()
        .map(|v| (v[0] - verts[0][0]).hypot(v[1] - verts[0][1]))
        .fold(0.0, f64::max)
}

fn sort(verts: &mut [[f64; 2]; 3], vals: &mut [f64; 3]) {
    let mut idx = [0, 1, 2];
    idx.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
    *verts = idx.map(|i| verts[i]);
    *vals = idx.map(|i| vals[i]);
}
