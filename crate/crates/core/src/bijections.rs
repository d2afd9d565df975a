//! Conversions between the object families.
//!
//! On the alternating sign matrix side the hub is the monotone triangle; on the
//! TSSCPP side it is the boolean triangle. The two sides meet only through
//! permutations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triangles::*;

pub fn asm_to_monotone(a: &Asm) -> MonotoneTriangle {
    let n = a.n();
    let mut partial = vec![0i32; n];
    let mut rows = Vec::with_capacity(n);
    for row in a.rows() {
        for (j, &v) in row.iter().enumerate() {
            partial[j] += v as i32;
        }
        rows.push((0..n).filter(|&j| partial[j] == 1).map(|j| j as u32 + 1).collect());
    }
    MonotoneTriangle::from_rows_unchecked(rows)
}

pub fn monotone_to_asm(m: &MonotoneTriangle) -> Asm {
    let n = m.n();
    let mut rows = vec![vec![0i8; n]; n];
    for i in 0..n {
        for &v in &m.rows()[i] {
            rows[i][v as usize - 1] += 1;
        }
        if i > 0 {
            for &v in &m.rows()[i - 1] {
                rows[i][v as usize - 1] -= 1;
            }
        }
    }
    Asm::from_rows_unchecked(rows)
}

/// `t(R, C) = α(C, C-R+1) - (C-R+1)`.
pub fn fundamental_from_magog(m: &MagogTriangle) -> FundamentalDomain {
    let n = m.n();
    let rows = (1..=n)
        .map(|r| {
            (r..=n)
                .map(|c| {
                    let p = c - r + 1;
                    m.get(c, p) - p as u32
                })
                .collect()
        })
        .collect();
    FundamentalDomain::from_rows_unchecked(n, rows)
}

/// `α(i, p) = t(i-p+1, i) + p`, validated against the magog inequalities.
pub fn magog_from_fundamental(d: &FundamentalDomain) -> Result<MagogTriangle> {
    let n = d.n();
    let rows = (1..=n)
        .map(|i| (1..=i).map(|p| d.get(i - p + 1, i) + p as u32).collect())
        .collect();
    MagogTriangle::new(rows).map_err(|e| Error::ResultNotMagog(e.to_string()))
}

/// Traces the level lines of the fundamental domain. For height `h` the cells
/// with `t >= h` form a shifted shape inside a staircase of size `k = n - h`;
/// path `k` takes a diagonal step at step `s` exactly when `k - s + 1` is a
/// row length of that shape.
pub fn nilp_from_fundamental(d: &FundamentalDomain) -> NilpNest {
    let n = d.n();
    let paths = (1..n)
        .map(|k| {
            let h = (n - k) as u32;
            let parts: Vec<usize> = (1..=n).map(|r| (r..=n).filter(|&c| d.get(r, c) >= h).count()).collect();
            (1..=k)
                .map(|s| if parts.contains(&(k - s + 1)) { Step::Diagonal } else { Step::Vertical })
                .collect()
        })
        .collect();
    NilpNest::from_paths_unchecked(n, paths)
}

pub fn fundamental_from_nilp(p: &NilpNest) -> FundamentalDomain {
    let n = p.n();
    // shapes[h][R-1] = λ^h_R
    let mut shapes = vec![vec![0usize; n]; n];
    for k in 1..n {
        let h = n - k;
        let mut parts: Vec<usize> = p
            .path(k)
            .iter()
            .enumerate()
            .filter(|(_, &st)| st == Step::Diagonal)
            .map(|(s, _)| k - s)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        for (r, part) in parts.into_iter().enumerate() {
            shapes[h][r] = part;
        }
    }
    let rows = (1..=n)
        .map(|r| (r..=n).map(|c| (1..n).filter(|&h| shapes[h][r - 1] > c - r).count() as u32).collect())
        .collect();
    FundamentalDomain::from_rows_unchecked(n, rows)
}

/// Path `k` reads column `k` of the triangle top to bottom; a one is a
/// vertical step.
pub fn boolean_to_nilp(b: &BooleanTriangle) -> NilpNest {
    let n = b.n();
    let paths = (1..n)
        .map(|k| {
            b.column(k)
                .into_iter()
                .map(|v| if v == 1 { Step::Vertical } else { Step::Diagonal })
                .collect()
        })
        .collect();
    NilpNest::from_paths_unchecked(n, paths)
}

pub fn nilp_to_boolean(p: &NilpNest) -> BooleanTriangle {
    let n = p.n();
    let rows = (1..n)
        .map(|i| {
            (1..=i)
                .map(|q| (p.path(n - i + q - 1)[q - 1] == Step::Vertical) as u8)
                .collect()
        })
        .collect();
    BooleanTriangle::from_rows_unchecked(n, rows)
}

pub fn magog_to_boolean(m: &MagogTriangle) -> BooleanTriangle {
    nilp_to_boolean(&nilp_from_fundamental(&fundamental_from_magog(m)))
}

pub fn boolean_to_magog(b: &BooleanTriangle) -> MagogTriangle {
    let d = fundamental_from_nilp(&boolean_to_nilp(b));
    magog_from_fundamental(&d).expect("every boolean triangle yields a magog triangle")
}

pub fn boolean_to_fundamental(b: &BooleanTriangle) -> FundamentalDomain {
    fundamental_from_nilp(&boolean_to_nilp(b))
}

pub fn fundamental_to_boolean(d: &FundamentalDomain) -> BooleanTriangle {
    nilp_to_boolean(&nilp_from_fundamental(d))
}

pub fn boolean_to_plane_partition(b: &BooleanTriangle) -> PlanePartition {
    expand_fundamental(&boolean_to_fundamental(b)).expect("every boolean triangle yields a TSSCPP")
}

pub fn plane_partition_to_boolean(p: &PlanePartition) -> Result<BooleanTriangle> {
    let d = fundamental_domain(p)?;
    magog_from_fundamental(&d)?;
    Ok(fundamental_to_boolean(&d))
}

/// Builds the monotone triangle from the bottom row up: entry `(i, p)` copies
/// its southwest neighbour under a one and its southeast neighbour under a zero.
pub fn boolean_to_monotone_perm(b: &BooleanTriangle) -> Result<MonotoneTriangle> {
    if let Some(row) = b.first_increasing_row() {
        return Err(Error::NotPermutationBoolean { row });
    }
    let n = b.n();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    rows[n - 1] = (1..=n as u32).collect();
    for i in (1..n).rev() {
        rows[i - 1] = (1..=i)
            .map(|p| if b.get(i, p) == 1 { rows[i][p - 1] } else { rows[i][p] })
            .collect();
    }
    MonotoneTriangle::new(rows).map_err(|e| Error::Internal(e.to_string()))
}

pub fn monotone_perm_to_boolean(m: &MonotoneTriangle) -> Result<BooleanTriangle> {
    let n = m.n();
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut row = Vec::with_capacity(i);
        for p in 1..=i {
            let v = m.get(i, p);
            match (v == m.get(i + 1, p), v == m.get(i + 1, p + 1)) {
                (true, false) => row.push(1),
                (false, true) => row.push(0),
                (false, false) => return Err(Error::NotPermutationMonotone { row: i, pos: p }),
                (true, true) => return Err(Error::Internal(format!("entry ({i},{p}) equals both neighbours"))),
            }
        }
        rows.push(row);
    }
    BooleanTriangle::new(n, rows).map_err(|e| Error::Internal(e.to_string()))
}

pub fn permutation_to_monotone(sigma: &Permutation) -> MonotoneTriangle {
    asm_to_monotone(&Asm::from_permutation(sigma))
}

pub fn monotone_to_permutation(m: &MonotoneTriangle) -> Result<Permutation> {
    monotone_to_asm(m).to_permutation().ok_or_else(|| {
        let (row, pos) = first_strict_entry(m).unwrap_or((0, 0));
        Error::NotPermutationMonotone { row, pos }
    })
}

fn first_strict_entry(m: &MonotoneTriangle) -> Option<(usize, usize)> {
    let n = m.n();
    (1..n)
        .flat_map(|i| (1..=i).map(move |p| (i, p)))
        .find(|&(i, p)| m.get(i + 1, p) < m.get(i, p) && m.get(i, p) < m.get(i + 1, p + 1))
}

pub fn permutation_to_boolean(sigma: &Permutation) -> BooleanTriangle {
    monotone_perm_to_boolean(&permutation_to_monotone(sigma)).expect("permutation triangles have no strict entries")
}

pub fn boolean_to_permutation(b: &BooleanTriangle) -> Result<Permutation> {
    let m = boolean_to_monotone_perm(b)?;
    monotone_to_permutation(&m)
}

/// `x_i = i + (sum of row n-i)` for `i < n`, and `x_n = n`.
pub fn bracket_vector(b: &BooleanTriangle) -> Result<Vec<u32>> {
    if let Some(row) = b.first_increasing_row() {
        return Err(Error::NotPermutationBoolean { row });
    }
    let n = b.n();
    Ok((1..=n)
        .map(|i| {
            let extra: u32 = if i < n { b.rows()[n - i - 1].iter().map(|&v| v as u32).sum() } else { 0 };
            i as u32 + extra
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Asm,
    MonotoneTriangle,
    MagogTriangle,
    BooleanTriangle,
    Nilp,
    Permutation,
    PlanePartition,
    FundamentalDomain,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Asm,
        Kind::MonotoneTriangle,
        Kind::MagogTriangle,
        Kind::BooleanTriangle,
        Kind::Nilp,
        Kind::Permutation,
        Kind::PlanePartition,
        Kind::FundamentalDomain,
    ];

    pub fn of(obj: &Object) -> Kind {
        match obj {
            Object::Asm(_) => Kind::Asm,
            Object::MonotoneTriangle(_) => Kind::MonotoneTriangle,
            Object::MagogTriangle(_) => Kind::MagogTriangle,
            Object::BooleanTriangle(_) => Kind::BooleanTriangle,
            Object::Nilp(_) => Kind::Nilp,
            Object::Permutation(_) => Kind::Permutation,
            Object::PlanePartition(_) => Kind::PlanePartition,
            Object::FundamentalDomain(_) => Kind::FundamentalDomain,
        }
    }

    fn on_asm_side(self) -> bool {
        matches!(self, Kind::Asm | Kind::MonotoneTriangle | Kind::Permutation)
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "asm" => Kind::Asm,
            "monotone" | "monotone_triangle" => Kind::MonotoneTriangle,
            "magog" | "magog_triangle" => Kind::MagogTriangle,
            "boolean" | "boolean_triangle" => Kind::BooleanTriangle,
            "nilp" => Kind::Nilp,
            "permutation" | "perm" => Kind::Permutation,
            "plane_partition" | "tsscpp" => Kind::PlanePartition,
            "fundamental_domain" | "domain" => Kind::FundamentalDomain,
            _ => return Err(Error::Unsupported(format!("unknown object kind {s:?}"))),
        })
    }
}

fn to_monotone(obj: &Object) -> Result<MonotoneTriangle> {
    match obj {
        Object::Asm(a) => Ok(asm_to_monotone(a)),
        Object::MonotoneTriangle(m) => Ok(m.clone()),
        Object::Permutation(p) => Ok(permutation_to_monotone(p)),
        _ => boolean_to_monotone_perm(&to_boolean(obj)?),
    }
}

fn to_boolean(obj: &Object) -> Result<BooleanTriangle> {
    match obj {
        Object::BooleanTriangle(b) => Ok(b.clone()),
        Object::MagogTriangle(m) => Ok(magog_to_boolean(m)),
        Object::FundamentalDomain(d) => {
            magog_from_fundamental(d)?;
            Ok(fundamental_to_boolean(d))
        }
        Object::PlanePartition(p) => plane_partition_to_boolean(p),
        Object::Nilp(p) => Ok(nilp_to_boolean(p)),
        Object::Permutation(p) => Ok(permutation_to_boolean(p)),
        Object::Asm(_) | Object::MonotoneTriangle(_) => monotone_perm_to_boolean(&to_monotone(obj)?),
    }
}

/// Converts between any two kinds. Crossing between the alternating sign
/// matrix side and the TSSCPP side only works for permutation objects.
pub fn convert(obj: &Object, to: Kind) -> Result<Object> {
    let from = Kind::of(obj);
    if from == to {
        return Ok(obj.clone());
    }
    if to.on_asm_side() {
        let m = to_monotone(obj)?;
        return Ok(match to {
            Kind::MonotoneTriangle => m.into(),
            Kind::Asm => monotone_to_asm(&m).into(),
            _ => monotone_to_permutation(&m)?.into(),
        });
    }
    let b = to_boolean(obj)?;
    Ok(match to {
        Kind::BooleanTriangle => b.into(),
        Kind::MagogTriangle => boolean_to_magog(&b).into(),
        Kind::FundamentalDomain => boolean_to_fundamental(&b).into(),
        Kind::Nilp => boolean_to_nilp(&b).into(),
        Kind::PlanePartition => boolean_to_plane_partition(&b).into(),
        _ => unreachable!("asm-side kinds handled above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(rows: &[&[u32]]) -> MonotoneTriangle {
        MonotoneTriangle::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn magog(rows: &[&[u32]]) -> MagogTriangle {
        MagogTriangle::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn boolean(n: usize, rows: &[&[u8]]) -> BooleanTriangle {
        BooleanTriangle::new(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn asm_with_minus_one() {
        let a = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        let m = asm_to_monotone(&a);
        assert_eq!(m, mono(&[&[2], &[1, 3], &[1, 2, 3]]));
        assert_eq!(monotone_to_asm(&m), a);
    }

    #[test]
    fn bold_magog_pairs_with_bold_boolean() {
        let m = magog(&[&[3], &[1, 3], &[1, 2, 3]]);
        let d = fundamental_from_magog(&m);
        assert_eq!(d.rows(), &[vec![2, 1, 0], vec![0, 0], vec![0]]);
        let b = magog_to_boolean(&m);
        assert_eq!(b, boolean(3, &[&[0], &[0, 1]]));
        assert_eq!(boolean_to_magog(&b), m);
    }

    #[test]
    fn identity_magog_is_all_ones() {
        for n in 1..7 {
            assert_eq!(magog_to_boolean(&MagogTriangle::identity(n)), BooleanTriangle::all_ones(n));
        }
    }

    #[test]
    fn all_ones_gives_vertical_paths() {
        let nest = boolean_to_nilp(&BooleanTriangle::all_ones(5));
        assert_eq!(nest.endpoints(), vec![1, 2, 3, 4]);
        assert!(nest.paths().iter().flatten().all(|&s| s == Step::Vertical));
    }

    #[test]
    fn permutation_bijection_on_worked_example() {
        let b = boolean(6, &[&[1], &[0, 0], &[1, 1, 0], &[0, 0, 0, 0], &[1, 0, 0, 0, 0]]);
        let m = boolean_to_monotone_perm(&b).unwrap();
        assert_eq!(m, mono(&[&[4], &[4, 6], &[3, 4, 6], &[3, 4, 5, 6], &[1, 3, 4, 5, 6], &[1, 2, 3, 4, 5, 6]]));
        let sigma = monotone_to_permutation(&m).unwrap();
        assert_eq!(sigma.to_string(), "463512");
        assert_eq!(permutation_to_boolean(&sigma), b);
    }

    #[test]
    fn non_permutation_inputs_are_rejected() {
        let b = boolean(3, &[&[0], &[0, 1]]);
        assert_eq!(boolean_to_monotone_perm(&b).unwrap_err(), Error::NotPermutationBoolean { row: 2 });
        let m = mono(&[&[2], &[1, 3], &[1, 2, 3]]);
        assert_eq!(monotone_perm_to_boolean(&m).unwrap_err(), Error::NotPermutationMonotone { row: 1, pos: 1 });
    }

    #[test]
    fn bracket_vector_of_all_ones() {
        assert_eq!(bracket_vector(&BooleanTriangle::all_ones(4)).unwrap(), vec![4, 4, 4, 4]);
        assert_eq!(bracket_vector(&BooleanTriangle::all_zeros(4)).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn convert_routes() {
        let sigma: Permutation = "231".parse().unwrap();
        let obj = Object::from(sigma.clone());
        for kind in Kind::ALL {
            let there = convert(&obj, kind).unwrap();
            assert_eq!(convert(&there, Kind::Permutation).unwrap(), obj, "{kind:?}");
        }
        let bold = Object::from(boolean(3, &[&[0], &[0, 1]]));
        assert!(convert(&bold, Kind::Asm).is_err());
        assert!(convert(&bold, Kind::PlanePartition).is_ok());
    }
}
