use super::scalar::{Field, Scalar};
use super::space::{decode, encode, Space};
use super::LinalgError;
use std::collections::BTreeMap;
use std::fmt;

/// A linear map between based spaces. Matrices are stored by rows (codomain index), each row a
/// sorted list of nonzero `(column, value)` pairs.
#[derive(Clone)]
pub struct LinMap {
    field: Field,
    dom: Space,
    cod: Space,
    rows: Vec<Vec<(usize, Scalar)>>,
}

fn accumulate(row: &mut BTreeMap<usize, Scalar>, j: usize, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match row.get_mut(&j) {
        Some(x) => {
            *x = &*x + &v;
            if x.is_zero() {
                row.remove(&j);
            }
        }
        None => {
            row.insert(j, v);
        }
    }
}

/// Equality is entrywise: field, dimensions and entries must agree; basis labels are ignored.
impl PartialEq for LinMap {
    fn eq(&self, o: &LinMap) -> bool {
        self.field == o.field && self.dom.dim() == o.dom.dim() && self.rows == o.rows
    }
}

impl Eq for LinMap {}

impl LinMap {
    pub fn zero(field: Field, dom: Space, cod: Space) -> LinMap {
        let rows = vec![Vec::new(); cod.dim()];
        LinMap { field, dom, cod, rows }
    }

    pub fn identity(field: Field, space: Space) -> LinMap {
        let one = field.one();
        let rows = (0..space.dim()).map(|i| vec![(i, one.clone())]).collect();
        LinMap { field, dom: space.clone(), cod: space, rows }
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples(
        field: Field,
        dom: Space,
        cod: Space,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> LinMap {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cod.dim()];
        for (i, j, v) in triples {
            assert!(i < cod.dim() && j < dom.dim(), "entry ({i},{j}) out of range");
            accumulate(&mut acc[i], j, v);
        }
        let rows = acc.into_iter().map(|r| r.into_iter().collect()).collect();
        LinMap { field, dom, cod, rows }
    }

    /// Builds a map column by column: `col(j)` lists `(row, value)` pairs for `e_j`.
    pub fn from_columns<F>(field: Field, dom: Space, cod: Space, mut col: F) -> LinMap
    where
        F: FnMut(usize) -> Vec<(usize, Scalar)>,
    {
        let n = dom.dim();
        let mut triples = Vec::new();
        for j in 0..n {
            for (i, v) in col(j) {
                triples.push((i, j, v));
            }
        }
        LinMap::from_triples(field, dom, cod, triples)
    }

    pub fn from_dense(
        field: Field,
        dom: Space,
        cod: Space,
        dense: &[Vec<Scalar>],
    ) -> Result<LinMap, LinalgError> {
        if dense.len() != cod.dim() || dense.iter().any(|r| r.len() != dom.dim()) {
            return Err(LinalgError::Dimension(format!(
                "dense matrix does not have shape {}x{}",
                cod.dim(),
                dom.dim()
            )));
        }
        let rows = dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| {
                        if v.field() != field {
                            Err(LinalgError::FieldMismatch)
                        } else {
                            Ok((j, v.clone()))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinMap { field, dom, cod, rows })
    }

    pub fn from_ints(field: Field, dom: Space, cod: Space, dense: &[Vec<i64>]) -> LinMap {
        let d: Vec<Vec<Scalar>> =
            dense.iter().map(|r| r.iter().map(|x| field.from_int(*x)).collect()).collect();
        LinMap::from_dense(field, dom, cod, &d).expect("shape")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &Space {
        &self.dom
    }

    pub fn codomain(&self) -> &Space {
        &self.cod
    }

    pub fn rows(&self) -> &[Vec<(usize, Scalar)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Replaces domain and codomain by spaces of the same dimensions.
    pub fn relabel(mut self, dom: Space, cod: Space) -> LinMap {
        assert_eq!(dom.dim(), self.dom.dim());
        assert_eq!(cod.dim(), self.cod.dim());
        self.dom = dom;
        self.cod = cod;
        self
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.dom.dim()]; self.cod.dim()];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    /// Columns as sparse `(row, value)` lists.
    pub fn columns(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut cols = vec![Vec::new(); self.dom.dim()];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        cols
    }

    pub fn transpose(&self) -> LinMap {
        let rows = self.columns();
        LinMap { field: self.field, dom: self.cod.clone(), cod: self.dom.clone(), rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.dom.dim() == self.cod.dim()
            && self.rows.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    fn same_field(&self, o: &LinMap) -> Result<(), LinalgError> {
        if self.field != o.field {
            Err(LinalgError::FieldMismatch)
        } else {
            Ok(())
        }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        self.same_field(g)?;
        if self.dom.dim() != g.cod.dim() {
            return Err(LinalgError::Dimension(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.dom, self.cod, g.dom, g.cod
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BTreeMap::new();
                for (l, a) in r {
                    for (j, b) in &g.rows[*l] {
                        accumulate(&mut acc, *j, a * b);
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(LinMap { field: self.field, dom: g.dom.clone(), cod: self.cod.clone(), rows })
    }

    /// `self ∘ g`, panicking on mismatch; for internal composites whose shapes are known.
    pub fn then_after(&self, g: &LinMap) -> LinMap {
        self.compose(g).expect("composable maps")
    }

    fn check_same_shape(&self, o: &LinMap) -> Result<(), LinalgError> {
        self.same_field(o)?;
        if self.dom.dim() != o.dom.dim() || self.cod.dim() != o.cod.dim() {
            return Err(LinalgError::Dimension(format!(
                "maps {} -> {} and {} -> {} differ in shape",
                self.dom, self.cod, o.dom, o.cod
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &LinMap) -> Result<LinMap, LinalgError> {
        self.linear_combination(&self.field.one(), o, &self.field.one())
    }

    pub fn sub(&self, o: &LinMap) -> Result<LinMap, LinalgError> {
        self.linear_combination(&self.field.one(), o, &self.field.from_int(-1))
    }

    /// `a·self + b·o`.
    pub fn linear_combination(&self, a: &Scalar, o: &LinMap, b: &Scalar) -> Result<LinMap, LinalgError> {
        self.check_same_shape(o)?;
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(r, s)| {
                let mut acc = BTreeMap::new();
                for (j, v) in r {
                    accumulate(&mut acc, *j, a * v);
                }
                for (j, v) in s {
                    accumulate(&mut acc, *j, b * v);
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(LinMap { field: self.field, dom: self.dom.clone(), cod: self.cod.clone(), rows })
    }

    pub fn scale(&self, a: &Scalar) -> LinMap {
        if a.is_zero() {
            return LinMap::zero(self.field, self.dom.clone(), self.cod.clone());
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, a * v)).collect())
            .collect();
        LinMap { field: self.field, dom: self.dom.clone(), cod: self.cod.clone(), rows }
    }

    pub fn neg(&self) -> LinMap {
        self.scale(&self.field.from_int(-1))
    }

    /// Kronecker product, following the row-major tensor basis.
    pub fn kron(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        self.same_field(g)?;
        let (gd, gc) = (g.dom.dim(), g.cod.dim());
        let mut rows = Vec::with_capacity(self.cod.dim() * gc);
        for r in &self.rows {
            for s in &g.rows {
                let mut row = Vec::with_capacity(r.len() * s.len());
                for (j, a) in r {
                    for (l, b) in s {
                        row.push((j * gd + l, a * b));
                    }
                }
                rows.push(row);
            }
        }
        Ok(LinMap {
            field: self.field,
            dom: self.dom.tensor(&g.dom),
            cod: self.cod.tensor(&g.cod),
            rows,
        })
    }

    pub fn kron_all<'a>(maps: impl IntoIterator<Item = &'a LinMap>) -> Result<LinMap, LinalgError> {
        let mut it = maps.into_iter();
        let first = it.next().ok_or_else(|| LinalgError::Dimension("empty Kronecker product".into()))?;
        let mut acc = first.clone();
        for m in it {
            acc = acc.kron(m)?;
        }
        Ok(acc)
    }

    /// Applies the map to a dense coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.dom.dim() {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} for domain {}",
                v.len(),
                self.dom
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().fold(self.field.zero(), |acc, (j, a)| &acc + &(a * &v[*j])))
            .collect())
    }

    /// Image of basis vector `e_j` as sparse `(row, value)` pairs.
    pub fn column(&self, j: usize) -> Vec<(usize, Scalar)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            if let Ok(k) = r.binary_search_by_key(&j, |(c, _)| *c) {
                out.push((i, r[k].1.clone()));
            }
        }
        out
    }

    /// The first `(row, column)` where the two maps differ, or `None` if they are equal.
    pub fn first_difference(&self, o: &LinMap) -> Result<Option<(usize, usize)>, LinalgError> {
        self.check_same_shape(o)?;
        let mut best: Option<(usize, usize)> = None;
        for (i, (r, s)) in self.rows.iter().zip(&o.rows).enumerate() {
            if r != s {
                let d = self.sub_rows(r, s);
                let j = d.first().map(|(j, _)| *j).unwrap_or(0);
                if best.is_none_or(|(_, bj)| j < bj) {
                    best = Some((i, j));
                }
            }
        }
        Ok(best)
    }

    fn sub_rows(&self, r: &[(usize, Scalar)], s: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        let mut acc = BTreeMap::new();
        for (j, v) in r {
            accumulate(&mut acc, *j, v.clone());
        }
        for (j, v) in s {
            accumulate(&mut acc, *j, -v);
        }
        acc.into_iter().collect()
    }

    /// Reorders tensor factors: output factor `k` is input factor `perm[k]`.
    pub fn permute_factors(space: &Space, perm: &[usize], field: Field) -> Result<LinMap, LinalgError> {
        let n = space.num_factors();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(LinalgError::Permutation(format!("{perm:?} is not a permutation of {n} factors")));
        }
        let shape = space.factor_shape();
        let out_shape: Vec<usize> = perm.iter().map(|&p| shape[p]).collect();
        let cod = Space::tensor_all(perm.iter().map(|&p| space.factor(p)).collect::<Vec<_>>().iter());
        let one = field.one();
        let triples = (0..space.dim()).map(|j| {
            let d = decode(j, &shape);
            let od: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
            (encode(&od, &out_shape), j, one.clone())
        });
        Ok(LinMap::from_triples(field, space.clone(), cod, triples))
    }

    /// Applies `kernel` to the factors of `dom` at positions `in_pos` (in that order) and
    /// places its output factors at positions `out_pos` of `cod`. All remaining factors pass
    /// through unchanged, in order.
    pub fn embed(
        kernel: &LinMap,
        dom: &Space,
        in_pos: &[usize],
        cod: &Space,
        out_pos: &[usize],
    ) -> Result<LinMap, LinalgError> {
        let ish = dom.factor_shape();
        let osh = cod.factor_shape();
        let err = |m: String| Err(LinalgError::Dimension(m));
        if in_pos.iter().any(|&p| p >= ish.len()) || out_pos.iter().any(|&p| p >= osh.len()) {
            return err(format!("slot out of range embedding into {dom} -> {cod}"));
        }
        let kin: Vec<usize> = in_pos.iter().map(|&p| ish[p]).collect();
        let kout: Vec<usize> = out_pos.iter().map(|&p| osh[p]).collect();
        if kin.iter().product::<usize>() != kernel.dom.dim() || kout.iter().product::<usize>() != kernel.cod.dim() {
            return err(format!("kernel {} -> {} does not fit slots of {dom} -> {cod}", kernel.dom, kernel.cod));
        }
        let pass_in: Vec<usize> = (0..ish.len()).filter(|p| !in_pos.contains(p)).collect();
        let pass_out: Vec<usize> = (0..osh.len()).filter(|p| !out_pos.contains(p)).collect();
        if pass_in.len() != pass_out.len() || pass_in.iter().zip(&pass_out).any(|(a, b)| ish[*a] != osh[*b]) {
            return err(format!("passthrough factors differ embedding into {dom} -> {cod}"));
        }
        let kcols: Vec<Vec<(Vec<usize>, Scalar)>> = kernel
            .columns()
            .into_iter()
            .map(|c| c.into_iter().map(|(r, v)| (decode(r, &kout), v)).collect())
            .collect();
        let mut triples = Vec::new();
        let mut od = vec![0usize; osh.len()];
        for j in 0..dom.dim() {
            let d = decode(j, &ish);
            let kd: Vec<usize> = in_pos.iter().map(|&p| d[p]).collect();
            let kc = encode(&kd, &kin);
            for (a, b) in pass_in.iter().zip(&pass_out) {
                od[*b] = d[*a];
            }
            for (rd, v) in &kcols[kc] {
                for (k, &p) in out_pos.iter().enumerate() {
                    od[p] = rd[k];
                }
                triples.push((encode(&od, &osh), j, v.clone()));
            }
        }
        Ok(LinMap::from_triples(kernel.field, dom.clone(), cod.clone(), triples))
    }
}

impl LinMap {
    /// Block version of [`embed`](Self::embed): `dom` and `cod` are tensor products of the
    /// given blocks (each possibly several factors), and the kernel acts on the selected blocks.
    pub fn embed_blocks(
        kernel: &LinMap,
        dom: &[&Space],
        in_sel: &[usize],
        cod: &[&Space],
        out_sel: &[usize],
    ) -> Result<LinMap, LinalgError> {
        fn positions(blocks: &[&Space], sel: &[usize]) -> Vec<usize> {
            let mut offs = Vec::with_capacity(blocks.len());
            let mut o = 0;
            for b in blocks {
                offs.push(o);
                o += b.num_factors();
            }
            sel.iter().flat_map(|&s| offs[s]..offs[s] + blocks[s].num_factors()).collect()
        }
        let d = Space::tensor_all(dom.iter().copied());
        let c = Space::tensor_all(cod.iter().copied());
        LinMap::embed(kernel, &d, &positions(dom, in_sel), &c, &positions(cod, out_sel))
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {} -> {} over {}", self.dom, self.cod, self.field)?;
        for r in self.to_dense() {
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", s.join(", "))?;
        }
        Ok(())
    }
}
