//! Free reduction and exact word arithmetic.
//!
//! Generators are `a..z`, inverses are the corresponding uppercase letters.
//! For freely reduced words the group metric coincides with the tree metric:
//! `d(u, v) = |u| + |v| − 2·lcp(u, v)`, valid at any length.

use super::GroupError;

/// Inverse of one letter: case swap.
#[inline]
pub fn invert_letter(c: u8) -> u8 {
    c ^ 0x20
}

#[inline]
pub fn is_letter(c: u8) -> bool {
    c.is_ascii_alphabetic()
}

/// Generator index (0-based) of a letter, ignoring case.
#[inline]
pub fn generator_index(c: u8) -> u8 {
    (c | 0x20) - b'a'
}

fn check_letters(word: &str) -> Result<(), GroupError> {
    match word.bytes().find(|&c| !is_letter(c)) {
        Some(c) => Err(GroupError::UnknownLetter(c as char)),
        None => Ok(()),
    }
}

fn check_rank(word: &str, rank: u8) -> Result<(), GroupError> {
    match word.bytes().find(|&c| generator_index(c) >= rank) {
        Some(c) => Err(GroupError::LetterOutOfRank { letter: c as char, rank }),
        None => Ok(()),
    }
}

/// Validates letters and rank in one pass.
pub fn check_word(word: &str, rank: u8) -> Result<(), GroupError> {
    check_letters(word)?;
    check_rank(word, rank)
}

/// Freely reduces a word by stack cancellation. Idempotent.
pub fn reduce(word: &str) -> Result<String, GroupError> {
    check_letters(word)?;
    let mut stack: Vec<u8> = Vec::with_capacity(word.len());
    for c in word.bytes() {
        if stack.last() == Some(&invert_letter(c)) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    Ok(String::from_utf8(stack).expect("ascii"))
}

pub fn is_reduced(word: &str) -> bool {
    let bytes = word.as_bytes();
    bytes.iter().all(|&c| is_letter(c))
        && bytes.windows(2).all(|w| w[1] != invert_letter(w[0]))
}

/// Inverse of a reduced word: reverse and swap case.
pub fn invert(word: &str) -> String {
    word.bytes().rev().map(|c| invert_letter(c) as char).collect()
}

/// Product of two reduced words, reduced. Cancellation can only happen at
/// the junction.
pub fn concat(u: &str, v: &str) -> String {
    let ub = u.as_bytes();
    let vb = v.as_bytes();
    let mut cut = 0;
    while cut < ub.len() && cut < vb.len() && ub[ub.len() - 1 - cut] == invert_letter(vb[cut]) {
        cut += 1;
    }
    let mut out = String::with_capacity(ub.len() + vb.len() - 2 * cut);
    out.push_str(&u[..ub.len() - cut]);
    out.push_str(&v[cut..]);
    out
}

/// Length of the longest common prefix of two words.
pub fn lcp_len(u: &str, v: &str) -> usize {
    u.bytes().zip(v.bytes()).take_while(|(a, b)| a == b).count()
}

/// Tree distance between reduced words.
pub fn word_dist(u: &str, v: &str) -> u32 {
    (u.len() + v.len() - 2 * lcp_len(u, v)) as u32
}

/// Order used for vertex ids and every lexicographic tie-break: by length,
/// then bytewise.
pub fn word_cmp(u: &str, v: &str) -> std::cmp::Ordering {
    u.len().cmp(&v.len()).then_with(|| u.as_bytes().cmp(v.as_bytes()))
}
