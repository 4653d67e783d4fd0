//! Dense complex linear algebra helpers built on nalgebra.

use nalgebra::{Complex, DMatrix, DVector, SymmetricEigen};

pub type C64 = Complex<f64>;

/// General complex linear operator (not necessarily square or unitary).
pub type Operator = DMatrix<C64>;

#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

#[inline]
pub fn real(re: f64) -> C64 {
    Complex::new(re, 0.0)
}

pub fn identity(n: usize) -> Operator {
    DMatrix::identity(n, n)
}

/// Largest entry modulus.
pub fn max_abs(m: &Operator) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// `max |(A†A − 𝟙)_ij|`.
pub fn unitarity_deviation(m: &Operator) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    max_abs(&(m.adjoint() * m - identity(m.nrows())))
}

/// Max-entry deviation from Hermiticity.
pub fn hermiticity_deviation(m: &Operator) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn trace(m: &Operator) -> C64 {
    m.diagonal().iter().sum()
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &Operator, b: &Operator) -> Operator {
    a.kronecker(b)
}

/// Singular values in descending order.
pub fn singular_values(m: &Operator) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Trace norm `Tr|X|`, the sum of singular values.
pub fn trace_norm(m: &Operator) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().iter().sum()
}

/// Thin SVD `m = u · diag(s) · v_t` with singular values sorted descending.
pub fn svd_sorted(m: &Operator) -> (Operator, Vec<f64>, Operator) {
    let svd = m.clone().svd(true, true);
    let u = svd.u.expect("requested u");
    let v_t = svd.v_t.expect("requested v_t");
    let s = svd.singular_values;
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&i, &j| s[j].total_cmp(&s[i]));
    let u_sorted = Operator::from_fn(u.nrows(), order.len(), |r, c| u[(r, order[c])]);
    let v_sorted = Operator::from_fn(order.len(), v_t.ncols(), |r, c| v_t[(order[r], c)]);
    let s_sorted = order.iter().map(|&i| s[i]).collect();
    (u_sorted, s_sorted, v_sorted)
}

/// Extend a matrix with orthonormal columns to a square unitary.
///
/// Candidates are the standard basis vectors, orthogonalized twice against the
/// current columns; the one with the largest residual is appended each round.
pub fn complete_unitary_columns(q: &Operator) -> Operator {
    let n = q.nrows();
    let mut cols: Vec<DVector<C64>> = q.column_iter().map(|c| c.into_owned()).collect();
    while cols.len() < n {
        let mut best: Option<(f64, DVector<C64>)> = None;
        for j in 0..n {
            let mut v = DVector::<C64>::zeros(n);
            v[j] = real(1.0);
            for _ in 0..2 {
                for c in &cols {
                    let proj = c.dotc(&v);
                    v -= c * proj;
                }
            }
            let norm = v.norm();
            if best.as_ref().is_none_or(|(b, _)| norm > *b) {
                best = Some((norm, v));
            }
        }
        let (norm, v) = best.expect("n > 0");
        cols.push(v / real(norm));
    }
    Operator::from_columns(&cols)
}

/// Index of the first entry with the largest modulus.
pub fn first_max_modulus_index<'a>(entries: impl Iterator<Item = &'a C64>) -> usize {
    let mut best = 0;
    let mut best_mod = -1.0;
    for (i, z) in entries.enumerate() {
        let m = z.norm();
        if m > best_mod {
            best = i;
            best_mod = m;
        }
    }
    best
}

/// Unit phase `p` such that `conj(p) · z` is real and nonnegative.
pub fn unit_phase(z: C64) -> C64 {
    let r = z.norm();
    if r == 0.0 {
        real(1.0)
    } else {
        z / r
    }
}

/// Hermitian eigendecomposition with eigenvalues descending. Eigenvectors are
/// the columns of the returned matrix, each rotated so that its first
/// largest-modulus entry is real and nonnegative.
pub fn hermitian_eigh(m: &Operator) -> (Vec<f64>, Operator) {
    let n = m.nrows();
    // Symmetrize to keep roundoff from leaking into the eigensolver.
    let h = (m + m.adjoint()) * real(0.5);
    let eig = SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vecs = Operator::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    for mut col in vecs.column_iter_mut() {
        let k = first_max_modulus_index(col.iter());
        let p = unit_phase(col[k]).conj();
        col *= p;
    }
    (values, vecs)
}

/// `exp(iH)` for Hermitian `H`, via its eigendecomposition. Exactly unitary up to roundoff.
pub fn expm_i_hermitian(h: &Operator) -> Operator {
    let (vals, vecs) = hermitian_eigh(h);
    let phases =
        DMatrix::from_diagonal(&DVector::from_iterator(vals.len(), vals.iter().map(|&l| c64(l.cos(), l.sin()))));
    &vecs * phases * vecs.adjoint()
}

/// Hermitian matrix from `d²` real parameters: the diagonal, then the real and
/// imaginary parts of the strict upper triangle in row-major order.
pub fn hermitian_from_params(d: usize, params: &[f64]) -> Operator {
    assert_eq!(params.len(), d * d, "need d² parameters");
    let mut h = Operator::zeros(d, d);
    for i in 0..d {
        h[(i, i)] = real(params[i]);
    }
    let mut k = d;
    for i in 0..d {
        for j in (i + 1)..d {
            let z = c64(params[k], params[k + 1]);
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
            k += 2;
        }
    }
    h
}

/// Generalized Pauli (clock and shift) operators `X^a Z^b`, `a, b ∈ 0..d`.
pub fn generalized_paulis(d: usize) -> Vec<Operator> {
    let omega = std::f64::consts::TAU / d as f64;
    let shift = Operator::from_fn(d, d, |r, c| if r == (c + 1) % d { real(1.0) } else { real(0.0) });
    let clock = Operator::from_fn(d, d, |r, c| {
        if r == c {
            let t = omega * r as f64;
            c64(t.cos(), t.sin())
        } else {
            real(0.0)
        }
    });
    let mut out = Vec::with_capacity(d * d);
    let mut xa = identity(d);
    for _ in 0..d {
        let mut zb = identity(d);
        for _ in 0..d {
            out.push(&xa * &zb);
            zb = &zb * &clock;
        }
        xa = &xa * &shift;
    }
    out
}
