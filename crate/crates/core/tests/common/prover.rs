//! Offline certificate search. Only used to *produce* certificates; the
//! library checks them independently.

#![allow(dead_code)]

use qhd_core::fpgroup::{product, CertFactor, Presentation, RelatorCertificate, Word};

/// `w = u · core · u⁻¹` with `core` cyclically reduced.
fn split_conjugate(w: &Word) -> (Word, Word) {
    let core = w.cyclic_reduce();
    let k = (w.len() - core.len()) / 2;
    (Word::new(w.letters()[..k].iter().copied()), core)
}

/// `w = c · r^{±1} · c⁻¹` for some relator `r`?
pub fn conjugate_factor(p: &Presentation, w: &Word) -> Option<CertFactor> {
    if w.is_empty() {
        return None;
    }
    let (u, wc) = split_conjugate(w);
    for (idx, r) in p.relators().iter().enumerate() {
        for sign in [1i8, -1] {
            let r = if sign > 0 { r.clone() } else { r.inv() };
            let (v, rc) = split_conjugate(&r);
            if rc.len() != wc.len() {
                continue;
            }
            for k in 0..rc.len() {
                // rc = s·t, rotation t·s = s⁻¹·rc·s
                if rc.rotate(k) == wc {
                    let s = Word::new(rc.letters()[..k].iter().copied());
                    let conj = u.mul(&s.inv()).mul(&v.inv());
                    return Some(CertFactor {
                        relator: idx,
                        sign,
                        conj,
                    });
                }
            }
        }
    }
    None
}

/// Rotations of every relator and inverse, with the conjugator realizing them.
fn rotations(p: &Presentation) -> Vec<(Word, usize, i8, Word)> {
    let mut out = Vec::new();
    for (idx, r) in p.relators().iter().enumerate() {
        for sign in [1i8, -1] {
            let r = if sign > 0 { r.clone() } else { r.inv() };
            let (v, rc) = split_conjugate(&r);
            for k in 0..rc.len() {
                let s = Word::new(rc.letters()[..k].iter().copied());
                // rotation = s⁻¹ · rc · s = (s⁻¹v⁻¹) · r · (v s)
                out.push((rc.rotate(k), idx, sign, s.inv().mul(&v.inv())));
            }
        }
    }
    out
}

/// Greedy length-reducing rewriting. Returns factors `F` and remainder `x`
/// with `w = ∏F · x`.
pub fn dehn(p: &Presentation, w: &Word) -> (Vec<CertFactor>, Word) {
    let rots = rotations(p);
    let mut factors = Vec::new();
    let mut cur = w.clone();
    loop {
        let s = cur.letters();
        let mut best: Option<(isize, usize, usize, usize)> = None; // gain, pos, rot, len
        for (ri, (rho, ..)) in rots.iter().enumerate() {
            let rl = rho.letters();
            for pos in 0..s.len() {
                let mut m = 0;
                while m < rl.len() && pos + m < s.len() && s[pos + m] == rl[m] {
                    m += 1;
                }
                if m == 0 {
                    continue;
                }
                let gain = 2 * m as isize - rl.len() as isize;
                if gain > 0 && best.is_none_or(|b| gain > b.0) {
                    best = Some((gain, pos, ri, m));
                }
            }
        }
        let Some((_, pos, ri, m)) = best else { break };
        let (rho, idx, sign, c) = &rots[ri];
        let a = Word::new(s[..pos].iter().copied());
        let z = Word::new(rho.letters()[m..].iter().copied());
        let b = Word::new(s[pos + m..].iter().copied());
        factors.push(CertFactor {
            relator: *idx,
            sign: *sign,
            conj: a.mul(c),
        });
        cur = a.mul(&z.inv()).mul(&b);
    }
    (factors, cur)
}

/// Sorts letters by generator index using commutator relators found by
/// [`conjugate_factor`]. Returns `(F, x)` with `w = ∏F · x`, or `None` if
/// some needed commutator is unavailable.
pub fn abelian_sort(p: &Presentation, w: &Word) -> Option<(Vec<CertFactor>, Word)> {
    let mut factors = Vec::new();
    let mut s: Vec<i32> = w.letters().to_vec();
    loop {
        let mut swapped = false;
        let mut i = 0;
        while i + 1 < s.len() {
            let (x, y) = (s[i], s[i + 1]);
            if x.abs() > y.abs() {
                let comm = Word::new([x, y, -x, -y]);
                let f = conjugate_factor(p, &comm)?;
                let a = Word::new(s[..i].iter().copied());
                factors.push(CertFactor {
                    relator: f.relator,
                    sign: f.sign,
                    conj: a.mul(&f.conj),
                });
                s.swap(i, i + 1);
                swapped = true;
            }
            i += 1;
        }
        if !swapped {
            break;
        }
        // keep things reduced as we go
        let red = Word::new(s.iter().copied());
        s = red.letters().to_vec();
    }
    Some((factors, Word::new(s)))
}

/// Tries to certify `w = 1`.
pub fn prove(p: &Presentation, w: &Word) -> Option<RelatorCertificate> {
    if w.is_empty() {
        return Some(RelatorCertificate::default());
    }
    if let Some(f) = conjugate_factor(p, w) {
        return Some(RelatorCertificate { factors: vec![f] });
    }
    let (mut fs, rest) = dehn(p, w);
    if rest.is_empty() {
        return Some(RelatorCertificate { factors: fs });
    }
    if let Some(f) = conjugate_factor(p, &rest) {
        fs.push(f);
        return Some(RelatorCertificate { factors: fs });
    }
    let (gs, rest2) = abelian_sort(p, &rest)?;
    fs.extend(gs);
    let (hs, rest3) = dehn(p, &rest2);
    fs.extend(hs);
    rest3
        .is_empty()
        .then_some(RelatorCertificate { factors: fs })
}

/// Reduced words of length ≤ `max` over `ngens` generators.
pub fn words_up_to(ngens: usize, max: usize) -> Vec<Word> {
    let mut all = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 1..=ngens as i32 {
                for x in [g, -g] {
                    if w.letters().last() == Some(&-x) {
                        continue;
                    }
                    next.push(w.mul(&Word::new([x])));
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Breadth-first search for a certificate with at most two factors, the first
/// conjugator of length ≤ `max_len` (the second is found by a conjugacy test).
pub fn bfs_two_factors(
    p: &Presentation,
    target: &Word,
    max_len: usize,
) -> Option<RelatorCertificate> {
    if let Some(f) = conjugate_factor(p, target) {
        return Some(RelatorCertificate { factors: vec![f] });
    }
    for c in words_up_to(p.ngens(), max_len) {
        for (idx, r) in p.relators().iter().enumerate() {
            for sign in [1i8, -1] {
                let r = if sign > 0 { r.clone() } else { r.inv() };
                let f1 = r.conj(&c);
                let rest = f1.inv().mul(target);
                if let Some(f2) = conjugate_factor(p, &rest) {
                    let first = CertFactor {
                        relator: idx,
                        sign,
                        conj: c.clone(),
                    };
                    return Some(RelatorCertificate {
                        factors: vec![first, f2],
                    });
                }
            }
        }
    }
    None
}

pub fn product_of(p: &Presentation, c: &RelatorCertificate) -> Word {
    product(
        &c.factors
            .iter()
            .map(|f| {
                let r = &p.relators()[f.relator];
                let r = if f.sign > 0 { r.clone() } else { r.inv() };
                r.conj(&f.conj)
            })
            .collect::<Vec<_>>(),
    )
}
