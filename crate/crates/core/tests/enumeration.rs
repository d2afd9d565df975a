use std::collections::BTreeSet;

use tsscpp::bijections::*;
use tsscpp::enumerate::{self, FamilyId};
use tsscpp::orders::short_label;
use tsscpp::triangles::Object;

fn short<T: Into<Object>>(x: T) -> String {
    short_label(&x.into().to_json())
}

/// Alternating sign matrices built a row at a time, keeping column partial
/// sums in {0, 1}.
fn naive_asms(n: usize) -> Vec<Vec<Vec<i8>>> {
    let mut rows = Vec::new();
    let mut candidate = vec![0i8; n];
    loop {
        let mut partial = 0;
        let alternating = candidate.iter().all(|&v| {
            partial += v;
            partial == 0 || partial == 1
        });
        if alternating && partial == 1 {
            rows.push(candidate.clone());
        }
        let mut k = 0;
        while k < n && candidate[k] == 1 {
            candidate[k] = -1;
            k += 1;
        }
        if k == n {
            break;
        }
        candidate[k] += 1;
    }
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<Vec<i8>>::new(), vec![0i8; n])];
    while let Some((matrix, sums)) = stack.pop() {
        if matrix.len() == n {
            if sums.iter().all(|&s| s == 1) {
                out.push(matrix);
            }
            continue;
        }
        for r in &rows {
            let next: Vec<i8> = sums.iter().zip(r).map(|(s, v)| s + v).collect();
            if next.iter().all(|&s| s == 0 || s == 1) {
                let mut m = matrix.clone();
                m.push(r.clone());
                stack.push((m, next));
            }
        }
    }
    out
}

/// All 0/1 fillings of the triangle with `n - 1` rows, kept when every
/// column's running sum never outgrows its left neighbour's by more than one.
fn naive_booleans(n: usize) -> Vec<Vec<Vec<u8>>> {
    let cells = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u64..1 << cells {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        let mut bit = 0;
        for i in 1..n {
            rows.push((0..i).map(|_| {
                let v = (mask >> bit & 1) as u8;
                bit += 1;
                v
            }).collect());
        }
        // column c (1-based, of n - 1) holds rows[n-1-c+s][s] for s < c
        let column_sum = |c: usize, through: usize| -> u32 {
            (0..c).filter(|&s| n - 1 - c + s < through).map(|s| rows[n - 1 - c + s][s] as u32).sum()
        };
        let ok = (1..=n - 1).all(|through| (2..=n - 1).all(|c| 1 + column_sum(c - 1, through) >= column_sum(c, through)));
        if ok {
            out.push(rows);
        }
    }
    out
}

fn naive_magogs(n: usize) -> Vec<Vec<Vec<u32>>> {
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=i).map(move |p| (i, p))).collect();
    let mut out = Vec::new();
    let mut values = vec![1u32; cells.len()];
    loop {
        let rows: Vec<Vec<u32>> = (1..=n)
            .map(|i| cells.iter().zip(&values).filter(|((r, _), _)| *r == i).map(|(_, &v)| v).collect())
            .collect();
        let bottom = rows[n - 1].iter().enumerate().all(|(p, &v)| v as usize == p + 1);
        let bounded = rows.iter().all(|r| r.iter().all(|&v| v as usize <= n) && r.windows(2).all(|w| w[0] < w[1]));
        let conditions = (1..n).all(|i| {
            (0..i).all(|p| rows[i][p] <= rows[i - 1][p] && rows[i - 1][p] + 1 >= rows[i][p + 1])
        });
        if bottom && bounded && conditions {
            out.push(rows);
        }
        let mut k = 0;
        while k < values.len() && values[k] == n as u32 {
            values[k] = 1;
            k += 1;
        }
        if k == values.len() {
            break;
        }
        values[k] += 1;
    }
    out.sort();
    out
}

#[test]
fn asms_match_the_naive_construction() {
    for n in 1..=5 {
        let ours: BTreeSet<Vec<Vec<i8>>> = enumerate::asms(n).map(|a| a.rows().to_vec()).collect();
        let naive: BTreeSet<Vec<Vec<i8>>> = naive_asms(n).into_iter().collect();
        assert_eq!(ours, naive, "n={n}");
    }
}

#[test]
fn booleans_match_the_naive_filter() {
    for n in 2..=6 {
        let ours: Vec<Vec<Vec<u8>>> = enumerate::boolean_triangles(n).map(|b| b.rows().to_vec()).collect();
        let naive: BTreeSet<Vec<Vec<u8>>> = naive_booleans(n).into_iter().collect();
        assert_eq!(ours.len(), naive.len(), "n={n}");
        assert_eq!(ours.iter().cloned().collect::<BTreeSet<_>>(), naive, "n={n}");
    }
}

#[test]
fn magogs_match_the_naive_filter() {
    for n in 1..=4 {
        let ours: Vec<Vec<Vec<u32>>> = enumerate::magog_triangles(n).map(|m| m.rows().to_vec()).collect();
        assert_eq!(ours, naive_magogs(n), "n={n}");
    }
}

#[test]
fn generators_are_sorted_without_repeats() {
    for n in 1..=5 {
        let m: Vec<_> = enumerate::monotone_triangles(n).map(|m| m.rows().to_vec()).collect();
        assert!(m.windows(2).all(|w| w[0] < w[1]));
        let b: Vec<_> = enumerate::boolean_triangles(n).map(|b| b.rows().to_vec()).collect();
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        let p: Vec<_> = enumerate::permutations(n).map(|p| p.as_slice().to_vec()).collect();
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn all_families_agree_in_size() {
    let expected = [1u64, 2, 7, 42, 429];
    for (n, &e) in (1..=5).zip(&expected) {
        for f in [
            FamilyId::Asm,
            FamilyId::MonotoneTriangle,
            FamilyId::MagogTriangle,
            FamilyId::BooleanTriangle,
            FamilyId::NilpNest,
            FamilyId::Tsscpp,
        ] {
            assert_eq!(enumerate::count(f, n).unwrap(), e, "{f} n={n}");
        }
    }
}

#[test]
fn order_three_listings_and_pairings() {
    let monotone = ["1/12/123", "1/13/123", "2/12/123", "2/13/123", "2/23/123", "3/13/123", "3/23/123"];
    let magog = ["1/12/123", "2/12/123", "2/13/123", "3/13/123", "3/12/123", "2/23/123", "3/23/123"];
    let boolean = ["1/11", "1/10", "0/11", "0/01", "1/00", "0/10", "0/00"];
    let ours: Vec<String> = enumerate::monotone_triangles(3).map(short).collect();
    assert_eq!(ours, monotone);
    for (m, b) in magog.iter().zip(boolean) {
        let triangle = enumerate::magog_triangles(3).find(|t| short(t.clone()) == *m).unwrap();
        assert_eq!(short(magog_to_boolean(&triangle)), b);
    }
    let non_permutation = 3;
    for (k, (m, b)) in monotone.iter().zip(boolean).enumerate() {
        let triangle = enumerate::boolean_triangles(3).find(|t| short(t.clone()) == b).unwrap();
        match boolean_to_monotone_perm(&triangle) {
            Ok(mono) => assert_eq!(short(mono), *m),
            Err(_) => assert_eq!(k, non_permutation),
        }
    }
}

#[test]
fn nilp_and_tsscpp_generators_follow_booleans() {
    for n in 1..=5 {
        let from_booleans: Vec<_> = enumerate::boolean_triangles(n).map(|b| boolean_to_nilp(&b)).collect();
        let nests: BTreeSet<_> = enumerate::nilp_nests(n).map(|p| format!("{p:?}")).collect();
        assert_eq!(nests.len(), from_booleans.len());
        assert!(from_booleans.iter().all(|p| nests.contains(&format!("{p:?}"))));
        for p in enumerate::tsscpps(n) {
            assert!(p.symmetry_report().is_tsscpp());
        }
    }
}

#[test]
fn caps_are_enforced() {
    let err = enumerate::count(FamilyId::BooleanTriangle, 40).unwrap_err();
    assert!(matches!(err, tsscpp::Error::CapExceeded { .. }));
}
