use super::presentation::Presentation;
use super::word::{letter_gen, Word};
use super::FpError;

/// Removes generator `gen` using relator `relator`, which must contain `gen`
/// exactly once with exponent ±1.
pub fn tietze_eliminate(
    p: &Presentation,
    gen: usize,
    relator: usize,
) -> Result<Presentation, FpError> {
    tietze_eliminate_with_value(p, gen, relator).map(|(q, _)| q)
}

/// As [`tietze_eliminate`], also returning the value of the removed
/// generator as a word in the remaining generators (new numbering).
pub fn tietze_eliminate_with_value(
    p: &Presentation,
    gen: usize,
    relator: usize,
) -> Result<(Presentation, Word), FpError> {
    let bad = FpError::NotEliminable { gen, relator };
    let r = p.relators().get(relator).ok_or(bad.clone())?;
    let hits: Vec<usize> = r
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, &x)| letter_gen(x) == gen)
        .map(|(i, _)| i)
        .collect();
    let [at] = hits[..] else { return Err(bad) };
    let s = r.letters();
    let u = Word::new(s[..at].iter().copied());
    let v = Word::new(s[at + 1..].iter().copied());
    // u·g·v = 1 ⇒ g = u⁻¹v⁻¹ ;  u·g⁻¹·v = 1 ⇒ g = v·u
    let value = if s[at] > 0 {
        u.inv().mul(&v.inv())
    } else {
        v.mul(&u)
    };

    // old generator index -> word in new numbering
    let images: Vec<Word> = (0..p.ngens())
        .map(|i| match i.cmp(&gen) {
            std::cmp::Ordering::Less => Word::gen(i),
            std::cmp::Ordering::Greater => Word::gen(i - 1),
            std::cmp::Ordering::Equal => Word::identity(),
        })
        .collect();
    let value = value.substitute(&images);
    let mut images = images;
    images[gen] = value.clone();

    let rels = p
        .relators()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != relator)
        .map(|(_, w)| w.substitute(&images))
        .collect();
    let mut names = p.names().to_vec();
    names.remove(gen);
    Ok((Presentation::new(names, rels)?, value))
}
