//! Rank, kernels, quotients and homology by exact elimination.

use super::linmap::LinMap;
use super::rational::Rational;
use super::scalar::{Field, Scalar};
use super::space::Space;
use super::LinalgError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Reduced row echelon form of dense rows, pivots increasing. Returns the nonzero rows and
/// their pivot columns.
pub fn rref(field: Field, mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].inv().unwrap();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        let nz: Vec<usize> = (c..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] = &row[j] - &(&f * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    let _ = field;
    (rows, pivots)
}

/// Fraction-free (Bareiss) rank of an integer matrix.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(k) = (r..nrows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, k);
        for i in r + 1..nrows {
            if m[i][c].is_zero() {
                // still rescale to keep the invariant that entries are the minors
                for j in c + 1..ncols {
                    let v = &m[r][c] * &m[i][j];
                    m[i][j] = v / &prev;
                }
                continue;
            }
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn integer_rows(rows: &[Vec<(usize, Scalar)>], ncols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, (_, v)| {
                acc.lcm(&v.as_rational().expect("rational entries").denom())
            });
            let mut out = vec![BigInt::zero(); ncols];
            for (j, v) in r {
                let q: &Rational = v.as_rational().unwrap();
                out[*j] = q.numer() * (&l / q.denom());
            }
            out
        })
        .collect()
}

pub fn rank(f: &LinMap) -> usize {
    let ncols = f.domain().dim();
    match f.field() {
        Field::Rational => bareiss_rank(integer_rows(f.rows(), ncols), ncols),
        Field::Prime(_) => {
            let dense: Vec<Vec<Scalar>> = f.to_dense().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
            rref(f.field(), dense, ncols).1.len()
        }
    }
}

/// Rank via Gauss–Jordan; an independent path used to cross-check [`rank`].
pub fn rank_by_rref(f: &LinMap) -> usize {
    rref(f.field(), f.to_dense(), f.domain().dim()).1.len()
}

/// Rank and a kernel basis (one vector per free column, in increasing column order).
pub fn rank_kernel(f: &LinMap) -> (usize, Vec<Vec<Scalar>>) {
    let n = f.domain().dim();
    let field = f.field();
    let (rows, pivots) = rref(field, f.to_dense(), n);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    (pivots.len(), basis)
}

/// Kernel of `f` as an inclusion map `ker f -> dom f`.
pub fn kernel_map(f: &LinMap) -> LinMap {
    let (_, basis) = rank_kernel(f);
    let k = Space::numbered("z", basis.len());
    let triples = basis
        .iter()
        .enumerate()
        .flat_map(|(c, v)| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(r, x)| (r, c, x.clone())))
        .collect::<Vec<_>>();
    LinMap::from_triples(f.field(), k, f.domain().clone(), triples)
}

/// Quotient of `space` by the span of the given vectors: returns the projection `q`
/// and the section `s` (coordinate inclusion of the surviving basis vectors), with `q∘s = id`.
pub fn quotient(field: Field, space: &Space, spanning: Vec<Vec<Scalar>>) -> (LinMap, LinMap) {
    let n = space.dim();
    let (rows, pivots) = rref(field, spanning, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut pos = vec![usize::MAX; n];
    for (k, &j) in keep.iter().enumerate() {
        pos[j] = k;
    }
    let labels: Vec<String> = keep.iter().map(|&j| space.label(j)).collect();
    let qs = Space::new(labels);
    let mut triples = Vec::new();
    for &j in &keep {
        triples.push((pos[j], j, field.one()));
    }
    for (row, &p) in rows.iter().zip(&pivots) {
        for &j in &keep {
            if !row[j].is_zero() {
                triples.push((pos[j], p, -&row[j]));
            }
        }
    }
    let q = LinMap::from_triples(field, space.clone(), qs.clone(), triples);
    let s = LinMap::from_triples(field, qs, space.clone(), keep.iter().enumerate().map(|(k, &j)| (j, k, field.one())));
    (q, s)
}

/// Coequalizer of a parallel pair `f, g: A -> X`: the projection `X -> X/im(f-g)`.
pub fn coequalizer(f: &LinMap, g: &LinMap) -> Result<LinMap, LinalgError> {
    Ok(coequalizer_with_section(f, g)?.0)
}

pub fn coequalizer_with_section(f: &LinMap, g: &LinMap) -> Result<(LinMap, LinMap), LinalgError> {
    if f.field() != g.field() {
        return Err(LinalgError::FieldMismatch);
    }
    if f.domain().dim() != g.domain().dim() || f.codomain().dim() != g.codomain().dim() {
        return Err(LinalgError::Dimension(format!(
            "coequalizer of non-parallel maps {} -> {} and {} -> {}",
            f.domain(),
            f.codomain(),
            g.domain(),
            g.codomain()
        )));
    }
    let d = f.sub(g)?;
    let spanning = d.transpose().to_dense();
    Ok(quotient(f.field(), f.codomain(), spanning))
}

/// Inverse of a square map.
pub fn inverse(f: &LinMap) -> Result<LinMap, LinalgError> {
    let n = f.domain().dim();
    if f.codomain().dim() != n {
        return Err(LinalgError::Dimension(format!("non-square map {} -> {}", f.domain(), f.codomain())));
    }
    let field = f.field();
    let mut aug: Vec<Vec<Scalar>> = f.to_dense();
    for (i, row) in aug.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
    }
    let (rows, pivots) = rref(field, aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(LinalgError::Singular);
    }
    let inv: Vec<Vec<Scalar>> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
    LinMap::from_dense(field, f.codomain().clone(), f.domain().clone(), &inv)
}

/// Homology dimensions of a chain complex given by differentials `ds[n]: C_n -> C_{n-1}`
/// for `n = 1..=top` (`ds[0]` is ignored and may be any map out of `C_0`). Reports
/// `H_0..H_{top-1}`; the top degree lacks its incoming differential and is omitted.
pub fn chain_homology(ds: &[LinMap]) -> Result<Vec<usize>, LinalgError> {
    for n in 2..ds.len() {
        if ds[n].codomain().dim() != ds[n - 1].domain().dim() {
            return Err(LinalgError::Dimension(format!("differential {n} does not land in C_{}", n - 1)));
        }
        let dd = ds[n - 1].compose(&ds[n])?;
        if !dd.is_zero() {
            return Err(LinalgError::NotAComplex(n));
        }
    }
    let ranks: Vec<usize> = ds.iter().map(rank).collect();
    let mut out = Vec::new();
    for n in 0..ds.len().saturating_sub(1) {
        let dim = ds[n].domain().dim();
        let out_rank = if n == 0 { 0 } else { ranks[n] };
        out.push(dim - out_rank - ranks[n + 1]);
    }
    Ok(out)
}
