//! Independent oracles: closed-form counts and brute force that do not go
//! through the library's enumerators.
#![allow(dead_code)]

use rand::Rng;
use tableau_dynamics::enumerate::enumerate_ssyt;
use tableau_dynamics::{Partition, Tableau};

/// Partitions of `n`, parts weakly decreasing, generated recursively.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("weakly decreasing parts")
}

/// Every partition with at most `max_size` cells, the empty one included.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(partitions)
        .map(|p| Partition::from_padded(p).expect("valid"))
        .collect()
}

fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width).map(|c| parts.iter().filter(|&&p| p > c).count()).collect()
}

fn hooks(parts: &[usize]) -> Vec<(usize, usize, u128)> {
    let conj = conjugate(parts);
    let mut out = Vec::new();
    for (r, &len) in parts.iter().enumerate() {
        for (c, &height) in conj.iter().enumerate().take(len) {
            let arm = len - c - 1;
            let leg = height - r - 1;
            out.push((r, c, (arm + leg + 1) as u128));
        }
    }
    out
}

/// `|SYT(λ)| = n! / ∏ hooks`.
pub fn hook_length_count(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    let fact: u128 = (1..=n as u128).product();
    fact / hooks(parts).iter().map(|h| h.2).product::<u128>()
}

/// `|SSYT_k(λ)| = ∏ (k + c − r) / hook` over cells.
pub fn hook_content_count(parts: &[usize], k: u32) -> u128 {
    let h = hooks(parts);
    let mut num: u128 = 1;
    for &(r, c, _) in &h {
        let content = k as i64 + c as i64 - r as i64;
        if content <= 0 {
            return 0;
        }
        num *= content as u128;
    }
    num / h.iter().map(|x| x.2).product::<u128>()
}

/// Counts semistandard fillings by trying every word in `[k]^n`.
pub fn brute_force_ssyt(parts: &[usize], k: u32) -> usize {
    let n: usize = parts.iter().sum();
    if n == 0 {
        return 1;
    }
    let mut fill = vec![1u32; n];
    let mut starts = Vec::new();
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    let at = |fill: &[u32], r: usize, c: usize| fill[starts[r] + c];
    let mut count = 0;
    loop {
        let ok = parts.iter().enumerate().all(|(r, &len)| {
            (0..len).all(|c| {
                (c == 0 || at(&fill, r, c - 1) <= at(&fill, r, c)) && (r == 0 || at(&fill, r - 1, c) < at(&fill, r, c))
            })
        });
        if ok {
            count += 1;
        }
        let mut i = 0;
        while i < n && fill[i] == k {
            fill[i] = 1;
            i += 1;
        }
        if i == n {
            return count;
        }
        fill[i] += 1;
    }
}

/// Counts bijections `labels: [n] → [n]` increasing along every relation.
pub fn brute_force_linear_extensions(n: usize, covers: &[(usize, usize)]) -> usize {
    fn go(n: usize, covers: &[(usize, usize)], placed: &mut Vec<bool>, left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for x in 0..n {
            let ready = !placed[x] && covers.iter().all(|&(a, b)| b != x || placed[a]);
            if ready {
                placed[x] = true;
                total += go(n, covers, placed, left - 1);
                placed[x] = false;
            }
        }
        total
    }
    go(n, covers, &mut vec![false; n], n)
}

/// A random skew tableau: a random semistandard filling of `λ` with a random
/// proper sub-diagram `μ` blanked out.
pub fn random_skew(rng: &mut impl Rng, max_size: usize, max_k: u32) -> Tableau {
    loop {
        let n = rng.gen_range(2..=max_size);
        let all = partitions(n);
        let lambda = &all[rng.gen_range(0..all.len())];
        let k = rng.gen_range(lambda.len() as u32..=max_k.max(lambda.len() as u32));
        let fillings: Vec<Tableau> = enumerate_ssyt(&partition(lambda), k).collect();
        let base = &fillings[rng.gen_range(0..fillings.len())];
        let mut mu = Vec::new();
        let mut bound = usize::MAX;
        for &part in lambda {
            let m = rng.gen_range(0..=part.min(bound));
            mu.push(m);
            bound = m;
        }
        if mu.iter().sum::<usize>() == 0 || mu == *lambda {
            continue;
        }
        let rows = base
            .rows()
            .iter()
            .zip(&mu)
            .map(|(row, &m)| row.iter().enumerate().map(|(c, &v)| (c >= m).then_some(v)).collect())
            .collect();
        return Tableau::from_skew_rows(rows, k).expect("restriction of a semistandard filling");
    }
}
