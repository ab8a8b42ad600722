//! Independent oracles for derived quantities. Each oracle works on plain
//! vectors and shares no code with the library beyond input parsing; the
//! frozen values below were produced by the oracles.

use std::collections::{BTreeMap, HashMap, HashSet};

use klr_specht::config::AlgebraConfig;
use klr_specht::partition::Multipartition;
use klr_specht::symgroup::{all_permutations, Permutation};
use klr_specht::tableau::{enumerate_std, std_graded_count};

type Shape = Vec<Vec<usize>>;

fn mp(s: &str) -> Multipartition {
    s.parse().expect("valid multipartition")
}

fn shape_of(lambda: &Multipartition) -> Shape {
    lambda.components().to_vec()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Hook length formula for one partition.
fn hook_count(p: &[usize]) -> u128 {
    let n: usize = p.iter().sum();
    let mut hooks: u128 = 1;
    for (r, &len) in p.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = p[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(n) / hooks
}

/// Standard multitableaux: a multinomial choice of entries per component
/// times the hook length count of each component.
fn std_count_oracle(shape: &Shape) -> u128 {
    let sizes: Vec<usize> = shape.iter().map(|p| p.iter().sum()).collect();
    let mut count = factorial(sizes.iter().sum());
    for (p, &s) in shape.iter().zip(&sizes) {
        count = count / factorial(s) * hook_count(p);
    }
    count
}

fn residue(kappa: &[i64], e: i64, r: usize, c: usize, m: usize) -> i64 {
    (kappa[m] + c as i64 - r as i64).rem_euclid(e)
}

fn addable(shape: &Shape) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (m, p) in shape.iter().enumerate() {
        for r in 0..=p.len() {
            let len = p.get(r).copied().unwrap_or(0);
            if r == 0 || p[r - 1] > len {
                out.push((r, len, m));
            }
        }
    }
    out
}

fn removable(shape: &Shape) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (m, p) in shape.iter().enumerate() {
        for r in 0..p.len() {
            if r + 1 == p.len() || p[r + 1] < p[r] {
                out.push((r, p[r] - 1, m));
            }
        }
    }
    out
}

/// Codegree generating function by brute force over all removal sequences:
/// the entry n sits at a removable node A and contributes the number of
/// addable minus removable nodes of the same residue strictly above A.
fn graded_oracle(shape: &Shape, kappa: &[i64], e: i64) -> BTreeMap<i64, u64> {
    fn go(shape: &mut Shape, kappa: &[i64], e: i64, acc: i64, out: &mut BTreeMap<i64, u64>) {
        if shape.iter().all(|p| p.is_empty()) {
            *out.entry(acc).or_default() += 1;
            return;
        }
        for (r, c, m) in removable(shape) {
            let i = residue(kappa, e, r, c, m);
            let above = |&(r2, c2, m2): &(usize, usize, usize)| {
                (m2 < m || (m2 == m && r2 < r)) && residue(kappa, e, r2, c2, m2) == i
            };
            let d = addable(shape).iter().filter(|b| above(b)).count() as i64
                - removable(shape).iter().filter(|b| above(b)).count() as i64;
            shape[m][r] -= 1;
            if shape[m][r] == 0 {
                shape[m].pop();
            }
            go(shape, kappa, e, acc + d, out);
            if r == shape[m].len() {
                shape[m].push(0);
            }
            shape[m][r] += 1;
        }
    }
    let mut out = BTreeMap::new();
    go(&mut shape.clone(), kappa, e, 0, &mut out);
    out
}

/// Defect `(Lambda|alpha) - (alpha|alpha)/2` from residue counts and the
/// symmetrised Cartan matrix of type A^(1)_{e-1}.
fn defect_oracle(shape: &Shape, kappa: &[i64], e: i64) -> i64 {
    let mut count = vec![0i64; e as usize];
    for (m, p) in shape.iter().enumerate() {
        for (r, &len) in p.iter().enumerate() {
            for c in 0..len {
                count[residue(kappa, e, r, c, m) as usize] += 1;
            }
        }
    }
    let lambda_pair: i64 = kappa.iter().map(|&k| count[k.rem_euclid(e) as usize]).sum();
    let mut alpha_pair = 0;
    for i in 0..e {
        for j in 0..e {
            let a = if i == j {
                2
            } else if e == 2 {
                -2
            } else if (i - j).rem_euclid(e) == 1 || (j - i).rem_euclid(e) == 1 {
                -1
            } else {
                0
            };
            alpha_pair += a * count[i as usize] * count[j as usize];
        }
    }
    lambda_pair - alpha_pair / 2
}

/// Bruhat order by the subword property: `u <= w` iff `u` is the product of
/// a subword of one fixed reduced word of `w`.
fn subword_products(w: &Permutation) -> HashSet<Vec<usize>> {
    // A reduced word by bubble sort on the one-line notation.
    let mut line = w.one_line();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..line.len().saturating_sub(1)).find(|&i| line[i] > line[i + 1]) else { break };
        line.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    let n = line.len();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut p: Vec<usize> = (1..=n).collect();
        for (k, &i) in word.iter().enumerate() {
            if mask & (1 << k) != 0 {
                p.swap(i, i + 1);
            }
        }
        out.insert(p);
    }
    out
}

fn family() -> Vec<(Multipartition, AlgebraConfig)> {
    let mut out = Vec::new();
    for (e, kappa, n) in [(2, vec![0], 7), (3, vec![0], 7), (3, vec![0, 1], 5), (2, vec![0, 1, 0], 4), (4, vec![1, 2, 0], 4)] {
        let cfg = AlgebraConfig::finite(e, &kappa);
        for size in 0..=n {
            for lambda in Multipartition::all(kappa.len(), size) {
                out.push((lambda, cfg.clone()));
            }
        }
    }
    out
}

#[test]
fn standard_counts_match_hook_formula() {
    for (lambda, cfg) in family() {
        let want = std_count_oracle(&shape_of(&lambda));
        assert_eq!(std_graded_count(&lambda, &cfg).0, want, "{lambda}");
        if lambda.size() <= 6 {
            assert_eq!(enumerate_std(&lambda).len() as u128, want, "{lambda}");
        }
    }
}

#[test]
fn graded_dimensions_match_brute_force() {
    for (lambda, cfg) in family().into_iter().filter(|(l, _)| l.size() <= 6) {
        let want = graded_oracle(&shape_of(&lambda), &cfg.kappa, cfg.e.to_string().parse().unwrap());
        let got = std_graded_count(&lambda, &cfg).1;
        assert_eq!(got.0.into_iter().filter(|(_, c)| *c > 0).collect::<BTreeMap<_, _>>(), want, "{lambda} {cfg}");
    }
}

#[test]
fn defects_match_cartan_formula() {
    for (lambda, cfg) in family() {
        let e: i64 = cfg.e.to_string().parse().unwrap();
        assert_eq!(lambda.defect(&cfg), defect_oracle(&shape_of(&lambda), &cfg.kappa, e), "{lambda} {cfg}");
    }
}

#[test]
fn bruhat_order_matches_subword_property() {
    for n in 1..=5 {
        let perms = all_permutations(n);
        let below: HashMap<Vec<usize>, HashSet<Vec<usize>>> =
            perms.iter().map(|w| (w.one_line(), subword_products(w))).collect();
        for u in &perms {
            for w in &perms {
                assert_eq!(u.bruhat_leq(w), below[&w.one_line()].contains(&u.one_line()), "{u} <= {w}");
            }
        }
    }
}

fn frozen_graded(lambda: &str, e: i64, kappa: &[i64]) -> Vec<(i64, u64)> {
    graded_oracle(&shape_of(&mp(lambda)), kappa, e).into_iter().collect()
}

#[test]
fn frozen_oracle_values() {
    assert_eq!(std_count_oracle(&shape_of(&mp("2,2|2,1,1|3,2"))), 2702700);
    assert_eq!(std_count_oracle(&shape_of(&mp("1,1|2,1,1,1|1"))), 672);
    assert_eq!(std_count_oracle(&shape_of(&mp("3,2,1"))), 16);
    assert_eq!(defect_oracle(&shape_of(&mp("2,2|2,1,1|3,2")), &[1, 2, 0], 4), 8);
    assert_eq!(defect_oracle(&shape_of(&mp("1,1|2,1,1,1|1")), &[0, 1, 0], 2), 9);
    assert_eq!(frozen_graded("2,1", 3, &[0]), vec![(0, 1), (1, 1)]);
    assert_eq!(frozen_graded("2,2", 2, &[0]), vec![(0, 1), (2, 1)]);
    assert_eq!(frozen_graded("1|3", 2, &[0, 0]), vec![(0, 2), (2, 2)]);
}
