use super::SynthesisError;
use crate::free_group::{invert_word, reduce_word, BoundaryPoint, GroupError};
use std::collections::BTreeMap;

/// A generator substitution `x ↦ word`, extended to words letterwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    images: BTreeMap<char, String>,
}

impl Endomorphism {
    pub fn new(images: BTreeMap<char, String>) -> Result<Endomorphism, SynthesisError> {
        for (g, w) in &images {
            if !g.is_ascii_lowercase() {
                return Err(SynthesisError::BadSubstitution(format!("{g}={w}")));
            }
            let reduced = reduce_word(w).map_err(SynthesisError::Group)?;
            if reduced != *w {
                return Err(SynthesisError::BadSubstitution(format!(
                    "image of {g} is not reduced: {w:?}"
                )));
            }
        }
        Ok(Endomorphism { images })
    }

    /// Parses `"a=a,b=ab"`.
    pub fn parse(text: &str) -> Result<Endomorphism, SynthesisError> {
        let mut images = BTreeMap::new();
        for part in text.split(',') {
            let mut it = part.splitn(2, '=');
            let gen = it
                .next()
                .filter(|s| s.len() == 1)
                .and_then(|s| s.chars().next())
                .ok_or_else(|| SynthesisError::BadSubstitution(text.to_string()))?;
            let image = it
                .next()
                .ok_or_else(|| SynthesisError::BadSubstitution(text.to_string()))?;
            if images.insert(gen, image.to_string()).is_some() {
                return Err(SynthesisError::BadSubstitution(format!(
                    "duplicate generator {gen}"
                )));
            }
        }
        Endomorphism::new(images)
    }

    pub fn generators(&self) -> impl Iterator<Item = char> + '_ {
        self.images.keys().copied()
    }

    /// Image of one letter; uppercase letters map to the inverse image.
    fn letter_image(&self, c: char) -> Result<String, GroupError> {
        let lower = c.to_ascii_lowercase();
        let img = self
            .images
            .get(&lower)
            .ok_or(GroupError::UnknownLetter(c))?;
        Ok(if c.is_ascii_lowercase() {
            img.clone()
        } else {
            invert_word(img)
        })
    }

    /// Applies the substitution to a word and reduces.
    pub fn apply(&self, word: &str) -> Result<String, GroupError> {
        let mut out = String::new();
        for c in word.chars() {
            out.push_str(&self.letter_image(c)?);
        }
        reduce_word(&out)
    }

    /// Largest image length over the generators — the multiplicative
    /// stretch bound.
    pub fn stretch(&self) -> usize {
        self.images.values().map(String::len).max().unwrap_or(1)
    }
}

/// A boundary map backed by a verified free-group automorphism: it acts on
/// an end `prefix(period)` by substituting both words and recanonicalizing.
#[derive(Debug, Clone)]
pub struct BoundaryMap {
    phi: Endomorphism,
    phi_inv: Endomorphism,
}

/// Verifies `φ_inv` as a two-sided inverse of `φ` on the generators, then
/// packages the boundary action.
pub fn boundary_map_from_endomorphism(
    phi: Endomorphism,
    phi_inv: Endomorphism,
) -> Result<BoundaryMap, SynthesisError> {
    let gens: Vec<char> = phi.generators().collect();
    let inv_gens: Vec<char> = phi_inv.generators().collect();
    if gens != inv_gens {
        return Err(SynthesisError::NotAnAutomorphism(
            "generator sets differ".to_string(),
        ));
    }
    for &g in &gens {
        let there = phi_inv
            .apply(&phi.letter_image(g).map_err(SynthesisError::Group)?)
            .map_err(SynthesisError::Group)?;
        let back = phi
            .apply(&phi_inv.letter_image(g).map_err(SynthesisError::Group)?)
            .map_err(SynthesisError::Group)?;
        let expected = g.to_string();
        if there != expected || back != expected {
            return Err(SynthesisError::NotAnAutomorphism(format!(
                "φ⁻¹(φ({g})) = {there:?}, φ(φ⁻¹({g})) = {back:?}"
            )));
        }
    }
    Ok(BoundaryMap { phi, phi_inv })
}

impl BoundaryMap {
    pub fn identity(rank: u8) -> BoundaryMap {
        let images: BTreeMap<char, String> = (0..rank)
            .map(|i| {
                let c = (b'a' + i) as char;
                (c, c.to_string())
            })
            .collect();
        let id = Endomorphism::new(images).expect("identity substitution");
        BoundaryMap {
            phi: id.clone(),
            phi_inv: id,
        }
    }

    pub fn phi(&self) -> &Endomorphism {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Endomorphism {
        &self.phi_inv
    }

    /// The inverse boundary map.
    pub fn inverse(&self) -> BoundaryMap {
        BoundaryMap {
            phi: self.phi_inv.clone(),
            phi_inv: self.phi.clone(),
        }
    }

    /// Image of a vertex word.
    pub fn apply_word(&self, w: &str) -> Result<String, GroupError> {
        self.phi.apply(w)
    }

    /// Image of an end: substitute prefix and period, recanonicalize.
    pub fn apply_point(&self, p: &BoundaryPoint) -> Result<BoundaryPoint, GroupError> {
        let prefix = self.phi.apply(p.prefix())?;
        let period = self.phi.apply(p.period())?;
        debug_assert!(!period.is_empty(), "automorphisms preserve infinite order");
        BoundaryPoint::new(&prefix, &period)
    }
}

/// Sample-based sanity check: `h` must send distinct points to distinct
/// points.
pub fn injective_on(h: &BoundaryMap, sample: &[BoundaryPoint]) -> Result<bool, GroupError> {
    let mut images = Vec::with_capacity(sample.len());
    for p in sample {
        images.push(h.apply_point(p)?);
    }
    for (i, p) in images.iter().enumerate() {
        for q in &images[i + 1..] {
            if p == q {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
