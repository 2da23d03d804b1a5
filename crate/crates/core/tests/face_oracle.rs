//! Independent face count for straight-line arrangements.
//!
//! Regions of the sphere are read off as sign vectors of sample points placed
//! in every sector around every crossing. A region has as many sides as there
//! are single-sign flips leading to another region. The result is compared
//! with the cell complex of the swept wiring diagram.

use std::collections::{BTreeMap, BTreeSet};

use arrlab::geometry::{self, HomogeneousLine, LineArrangement};
use arrlab::wiring::CellComplex;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

type V3 = [BigInt; 3];

fn dot(a: &V3, b: &V3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &V3, b: &V3) -> V3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn combine(k: &BigInt, p: &V3, s1: i32, u: &V3, s2: i32, w: &V3) -> V3 {
    std::array::from_fn(|c| k * &p[c] + BigInt::from(s1) * &u[c] + BigInt::from(s2) * &w[c])
}

/// Face-size histogram of the projective arrangement.
fn oracle_faces(arr: &LineArrangement) -> BTreeMap<u32, u64> {
    let lines: Vec<V3> = arr.lines().iter().map(|l| l.coeffs().clone()).collect();
    let mut regions: BTreeSet<Vec<i8>> = BTreeSet::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            let p = cross(&lines[a], &lines[b]);
            let through: Vec<usize> = (0..lines.len()).filter(|&i| dot(&lines[i], &p).is_zero()).collect();
            let dirs: Vec<V3> = through.iter().map(|&i| cross(&lines[i], &p)).collect();
            for x in 0..dirs.len() {
                for y in x + 1..dirs.len() {
                    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let w = combine(&BigInt::zero(), &p, s1, &dirs[x], s2, &dirs[y]);
                        let mut k = BigInt::zero();
                        for l in &lines {
                            let lp = dot(l, &p).abs();
                            if !lp.is_zero() {
                                k = k.max(dot(l, &w).abs() / lp);
                            }
                        }
                        k += 1;
                        let pt = combine(&k, &p, s1, &dirs[x], s2, &dirs[y]);
                        let signs: Vec<i8> = lines
                            .iter()
                            .map(|l| {
                                let d = dot(l, &pt);
                                if d.is_positive() {
                                    1
                                } else if d.is_negative() {
                                    -1
                                } else {
                                    0
                                }
                            })
                            .collect();
                        if signs.contains(&0) {
                            continue;
                        }
                        regions.insert(signs.iter().map(|s| -s).collect());
                        regions.insert(signs);
                    }
                }
            }
        }
    }
    let mut hist = BTreeMap::new();
    for s in &regions {
        let sides = (0..s.len())
            .filter(|&i| {
                let mut t = s.clone();
                t[i] = -t[i];
                regions.contains(&t)
            })
            .count() as u32;
        *hist.entry(sides).or_insert(0u64) += 1;
    }
    for c in hist.values_mut() {
        assert_eq!(*c % 2, 0, "sphere regions come in antipodal pairs");
        *c /= 2;
    }
    hist
}

fn complex_faces(arr: &LineArrangement) -> BTreeMap<u32, u64> {
    let seq = arr.to_wiring().unwrap();
    let cc = CellComplex::build(&seq).unwrap();
    assert_eq!(cc.ti_profile().unwrap(), arr.ti_profile().unwrap());
    cc.pj_profile().unwrap().iter().collect()
}

#[test]
fn witnesses_match_oracle() {
    for n in 3..=9 {
        for k in 1..=n - 2 {
            let tmax = (n - k).min(k * (k - 1) / 2);
            for t in 0..=tmax {
                let arr = geometry::construct_witness(n, k, t).unwrap();
                assert_eq!(oracle_faces(&arr), complex_faces(&arr), "n={n} k={k} t={t}");
            }
        }
    }
}

#[test]
fn named_arrangements_match_oracle() {
    for n in 3..=8 {
        let arr = geometry::construct_generic(n).unwrap();
        assert_eq!(oracle_faces(&arr), complex_faces(&arr));
    }
    for (a, b) in [(3, 3), (4, 4), (3, 5), (2, 4)] {
        let arr = geometry::construct_two_pencils(a, b).unwrap();
        assert_eq!(oracle_faces(&arr), complex_faces(&arr), "pencils {a},{b}");
    }
    let q = geometry::construct_complete_quadrilateral();
    assert_eq!(oracle_faces(&q), complex_faces(&q));
}

#[test]
fn oracle_on_generic_three() {
    let arr = geometry::construct_generic(3).unwrap();
    assert_eq!(oracle_faces(&arr), BTreeMap::from([(3, 4)]));
}

fn small_lines() -> impl Strategy<Value = LineArrangement> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 3..=7).prop_filter_map("need distinct nontrivial lines", |raw| {
        let lines: Vec<HomogeneousLine> = raw.into_iter().filter_map(|(a, b, c)| HomogeneousLine::new(a, b, c).ok()).collect();
        let arr = LineArrangement::new(lines).ok()?;
        (arr.n() >= 3 && !arr.is_trivial()).then_some(arr)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_lines_match_oracle(arr in small_lines()) {
        prop_assert_eq!(oracle_faces(&arr), complex_faces(&arr));
    }
}
