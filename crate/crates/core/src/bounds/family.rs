//! The lower-bound family `s_k = B_0 B_1 ... B_k a` with
//! `B_0 = b` and `B_i = (a^i b a^1 b)(a^i b a^2 b) ... (a^i b a^{i-1} b) a^i b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::Text;

fn a(n: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat_n(b'a', n)
}

/// Block `B_i`.
pub fn family_block(i: usize) -> Vec<u8> {
    if i == 0 {
        return b"b".to_vec();
    }
    let mut out = Vec::new();
    for j in 1..i {
        out.extend(a(i));
        out.push(b'b');
        out.extend(a(j));
        out.push(b'b');
    }
    out.extend(a(i));
    out.push(b'b');
    out
}

/// Byte offsets (0-based, half-open) of `B_0, ..., B_k` inside `s_k`.
pub fn family_block_ranges(k: usize) -> Vec<std::ops::Range<usize>> {
    let mut pos = 0;
    (0..=k)
        .map(|i| {
            let len = family_block(i).len();
            pos += len;
            pos - len..pos
        })
        .collect()
}

pub fn generate_family(k: usize) -> Text {
    let mut out: Vec<u8> = (0..=k).flat_map(family_block).collect();
    out.push(b'a');
    Text::new(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyCounts {
    pub k: usize,
    pub m_k: usize,
    pub z_k: usize,
}

/// `m_k = k²/2 + k/2 + 2`, `z_k = k²/2 − k/2 + 4`.
pub fn expected_counts(k: usize) -> Result<FamilyCounts> {
    if k < 2 {
        return Err(Error::FormulaDomain(k));
    }
    Ok(FamilyCounts {
        k,
        m_k: (k * k + k) / 2 + 2,
        z_k: (k * k - k) / 2 + 4,
    })
}

/// Phrase list built by the recurrence
/// `LZ(s_k) = LZ(s_{k-1}) · a^{k-1}baba^{k-1} · aba^2ba^{k-1} ⋯ aba^{k-2}ba^{k-1} · aba^{k-1}ba^kba`
/// from `LZ(s_2) = b, a, ba, aba, baaba`.
pub fn expected_lz_phrases(k: usize) -> Result<Vec<Text>> {
    if k < 2 {
        return Err(Error::FormulaDomain(k));
    }
    let mut phrases: Vec<Vec<u8>> = ["b", "a", "ba", "aba", "baaba"]
        .iter()
        .map(|p| p.as_bytes().to_vec())
        .collect();
    for kk in 3..=k {
        let mut first: Vec<u8> = a(kk - 1).collect();
        first.extend_from_slice(b"bab");
        first.extend(a(kk - 1));
        phrases.push(first);
        for j in 2..=kk - 2 {
            let mut p = b"ab".to_vec();
            p.extend(a(j));
            p.push(b'b');
            p.extend(a(kk - 1));
            phrases.push(p);
        }
        let mut last = b"ab".to_vec();
        last.extend(a(kk - 1));
        last.push(b'b');
        last.extend(a(kk));
        last.extend_from_slice(b"ba");
        phrases.push(last);
    }
    Ok(phrases.into_iter().map(Text::new).collect())
}
