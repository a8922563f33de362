//! Pauli strings in the symplectic representation with exact phases.
//!
//! A `PauliString` is `i^phase` times a tensor product of the Hermitian
//! letters `I, X, Y, Z`, where qubit `q` carries `X` for `(x, z) = (1, 0)`,
//! `Z` for `(0, 1)` and `Y = i·X·Z` for `(1, 1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::BitVector;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVector,
    z: BitVector,
    phase: u8,
}

/// Clifford generators acting by conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clifford {
    H(usize),
    S(usize),
    Cnot(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Dense,
    Sparse,
}

/// Phase-free identity of a Pauli: the concatenation `x ++ z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliKey {
    n_qubits: usize,
    words: Box<[u64]>,
}

fn check_width(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::WidthMismatch(a, b))
    }
}

/// Phase exponent picked up when multiplying the letter strings `a·b`.
fn letter_phase(ax: &[u64], az: &[u64], bx: &[u64], bz: &[u64]) -> u8 {
    let mut plus = 0u32;
    let mut minus = 0u32;
    for i in 0..ax.len() {
        let (x1, z1, x2, z2) = (ax[i], az[i], bx[i], bz[i]);
        // X·Y = iZ, Y·Z = iX, Z·X = iY and their reverses with -i
        plus += ((x1 & !z1 & x2 & z2) | (x1 & z1 & !x2 & z2) | (!x1 & z1 & x2 & !z2)).count_ones();
        minus += ((x1 & z1 & x2 & !z2) | (!x1 & z1 & x2 & z2) | (x1 & !z1 & !x2 & z2)).count_ones();
    }
    ((plus + 3 * minus) % 4) as u8
}

fn symplectic_odd(ax: &[u64], az: &[u64], bx: &[u64], bz: &[u64]) -> bool {
    let mut acc = 0u32;
    for i in 0..ax.len() {
        acc ^= ((ax[i] & bz[i]) ^ (az[i] & bx[i])).count_ones();
    }
    acc & 1 == 1
}

impl PauliString {
    pub fn identity(n_qubits: usize) -> Self {
        PauliString { x: BitVector::zeros(n_qubits), z: BitVector::zeros(n_qubits), phase: 0 }
    }

    pub fn from_bits(x: BitVector, z: BitVector, phase: u8) -> Result<Self> {
        check_width(x.len(), z.len())?;
        Ok(PauliString { x, z, phase: phase % 4 })
    }

    /// A single letter (`'I'`, `'X'`, `'Y'` or `'Z'`) on qubit `q`.
    pub fn single(n_qubits: usize, q: usize, letter: char) -> Result<Self> {
        if q >= n_qubits {
            return Err(Error::Width { index: q, width: n_qubits });
        }
        let mut p = Self::identity(n_qubits);
        p.set_letter(q, letter).ok_or_else(|| Error::parse(0, format!("invalid letter {letter:?}")))?;
        Ok(p)
    }

    fn set_letter(&mut self, q: usize, letter: char) -> Option<()> {
        let (x, z) = match letter {
            'I' => (false, false),
            'X' => (true, false),
            'Y' => (true, true),
            'Z' => (false, true),
            _ => return None,
        };
        self.x.set(q, x);
        self.z.set(q, z);
        Some(())
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    #[inline]
    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    #[inline]
    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(mut self, phase: u8) -> Self {
        self.phase = phase % 4;
        self
    }

    pub fn letter(&self, q: usize) -> char {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.x.words().iter().zip(self.z.words()).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    /// Support qubits in ascending order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n_qubits()).filter(|&q| self.x.get(q) || self.z.get(q)).collect()
    }

    /// Pads with identity (or truncates) to `n_qubits`; phase kept.
    pub fn resized(&self, n_qubits: usize) -> Self {
        PauliString { x: self.x.resized(n_qubits), z: self.z.resized(n_qubits), phase: self.phase }
    }

    /// Exact operator product `self · other`.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        check_width(self.n_qubits(), other.n_qubits())?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliString) -> PauliString {
        let extra = letter_phase(self.x.words(), self.z.words(), other.x.words(), other.z.words());
        PauliString {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + extra) % 4,
        }
    }

    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        check_width(self.n_qubits(), other.n_qubits())?;
        Ok(!self.anticommutes_unchecked(other))
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &PauliString) -> bool {
        symplectic_odd(self.x.words(), self.z.words(), other.x.words(), other.z.words())
    }

    /// `½·i·[self, other] = i·self·other` when the pair anticommutes.
    pub fn commutator(&self, other: &PauliString) -> Result<Option<PauliString>> {
        check_width(self.n_qubits(), other.n_qubits())?;
        if !self.anticommutes_unchecked(other) {
            return Ok(None);
        }
        let mut r = self.mul_unchecked(other);
        r.phase = (r.phase + 1) % 4;
        Ok(Some(r))
    }

    /// True iff the Hermitian representative is antisymmetric (odd number of `Y`).
    pub fn is_antisymmetric(&self) -> bool {
        let ys: u32 = self.x.words().iter().zip(self.z.words()).map(|(a, b)| (a & b).count_ones()).sum();
        ys & 1 == 1
    }

    /// Conjugation `g · self · g†`.
    pub fn apply(&self, gate: Clifford) -> Result<PauliString> {
        let n = self.n_qubits();
        let in_range = |q: usize| if q < n { Ok(()) } else { Err(Error::Width { index: q, width: n }) };
        let mut out = self.clone();
        match gate {
            Clifford::H(q) => {
                in_range(q)?;
                let (x, z) = (self.x.get(q), self.z.get(q));
                out.x.set(q, z);
                out.z.set(q, x);
                if x && z {
                    out.phase = (out.phase + 2) % 4;
                }
            }
            Clifford::S(q) => {
                in_range(q)?;
                let (x, z) = (self.x.get(q), self.z.get(q));
                if x {
                    out.z.set(q, !z);
                    if z {
                        out.phase = (out.phase + 2) % 4;
                    }
                }
            }
            Clifford::Cnot(c, t) => {
                in_range(c)?;
                in_range(t)?;
                if c == t {
                    return Err(Error::parse(0, "CNOT control equals target"));
                }
                let (xc, zc, xt, zt) = (self.x.get(c), self.z.get(c), self.x.get(t), self.z.get(t));
                if xc && zt && !(xt ^ zc) {
                    out.phase = (out.phase + 2) % 4;
                }
                out.x.set(t, xt ^ xc);
                out.z.set(c, zc ^ zt);
            }
        }
        Ok(out)
    }

    pub fn key(&self) -> PauliKey {
        let mut words = Vec::with_capacity(2 * self.x.words().len());
        words.extend_from_slice(self.x.words());
        words.extend_from_slice(self.z.words());
        PauliKey { n_qubits: self.n_qubits(), words: words.into_boxed_slice() }
    }

    /// Symplectic vector `x ++ z` of length `2·n_qubits`.
    pub fn symplectic(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    pub fn to_text(&self, style: Style) -> String {
        format_pauli(self, style)
    }
}

impl PauliKey {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    fn halves(&self) -> (&[u64], &[u64]) {
        self.words.split_at(self.words.len() / 2)
    }

    pub fn is_identity(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn anticommutes(&self, other: &PauliKey) -> bool {
        let (ax, az) = self.halves();
        let (bx, bz) = other.halves();
        symplectic_odd(ax, az, bx, bz)
    }

    /// Key of the product (phases ignored).
    #[inline]
    pub fn product(&self, other: &PauliKey) -> PauliKey {
        PauliKey {
            n_qubits: self.n_qubits,
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// The Hermitian letter string with phase exponent 0.
    pub fn to_pauli(&self) -> PauliString {
        let (xw, zw) = self.halves();
        let mut x = BitVector::zeros(self.n_qubits);
        let mut z = BitVector::zeros(self.n_qubits);
        for q in 0..self.n_qubits {
            if (xw[q / 64] >> (q % 64)) & 1 == 1 {
                x.set(q, true);
            }
            if (zw[q / 64] >> (q % 64)) & 1 == 1 {
                z.set(q, true);
            }
        }
        PauliString { x, z, phase: 0 }
    }
}

impl fmt::Debug for PauliKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliKey({})", format_pauli(&self.to_pauli(), Style::Dense))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pauli(self, Style::Sparse))
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({})", format_pauli(self, Style::Dense))
    }
}

fn sign_prefix(phase: u8) -> &'static str {
    match phase % 4 {
        0 => "",
        1 => "+i",
        2 => "-",
        _ => "-i",
    }
}

pub fn format_pauli(p: &PauliString, style: Style) -> String {
    let mut s = String::from(sign_prefix(p.phase));
    match style {
        Style::Dense => s.extend((0..p.n_qubits()).map(|q| p.letter(q))),
        Style::Sparse => {
            let support = p.support();
            if support.is_empty() {
                s.push('I');
            }
            let tokens: Vec<String> = support.iter().map(|&q| format!("{}{q}", p.letter(q))).collect();
            s.push_str(&tokens.join(" "));
        }
    }
    s
}

/// Parses dense (`"XIZY"`) or sparse (`"X0 Z3 Y5"`) text with an optional
/// `+`, `-`, `+i` or `-i` prefix. Positions in errors are 0-based character
/// offsets into `text`.
pub fn parse_pauli(text: &str, n_qubits: Option<usize>) -> Result<PauliString> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    let mut phase = 0u8;
    if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
        if chars[i] == '-' {
            phase = 2;
        }
        i += 1;
        if i < chars.len() && chars[i] == 'i' {
            phase += 1;
            i += 1;
        }
        skip_ws(&mut i);
    }
    let mut end = chars.len();
    while end > i && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    if i == end {
        return Err(Error::parse(i, "empty Pauli string"));
    }
    let body = &chars[i..end];
    let mut p = if body.iter().any(|c| c.is_ascii_digit()) {
        parse_sparse(body, i, n_qubits)?
    } else {
        parse_dense(body, i, n_qubits)?
    };
    p.phase = phase;
    Ok(p)
}

fn parse_dense(body: &[char], offset: usize, n_qubits: Option<usize>) -> Result<PauliString> {
    let width = n_qubits.unwrap_or(body.len());
    if body.len() > width {
        return Err(Error::Width { index: body.len() - 1, width });
    }
    let mut p = PauliString::identity(width);
    for (q, &c) in body.iter().enumerate() {
        p.set_letter(q, c).ok_or_else(|| Error::parse(offset + q, format!("invalid character {c:?}")))?;
    }
    Ok(p)
}

fn parse_sparse(body: &[char], offset: usize, n_qubits: Option<usize>) -> Result<PauliString> {
    let mut tokens: Vec<(char, usize)> = Vec::new();
    let mut i = 0;
    while i < body.len() {
        if body[i].is_whitespace() {
            i += 1;
            continue;
        }
        let letter = body[i];
        if !matches!(letter, 'I' | 'X' | 'Y' | 'Z') {
            return Err(Error::parse(offset + i, format!("invalid character {letter:?}")));
        }
        i += 1;
        let start = i;
        while i < body.len() && body[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(Error::parse(offset + i.min(body.len()), "expected qubit index"));
        }
        let digits: String = body[start..i].iter().collect();
        let q: usize = digits.parse().map_err(|_| Error::parse(offset + start, "qubit index too large"))?;
        tokens.push((letter, q));
    }
    let max = tokens.iter().map(|t| t.1).max().unwrap_or(0);
    let width = match n_qubits {
        Some(n) => {
            if max >= n {
                return Err(Error::Width { index: max, width: n });
            }
            n
        }
        None => max + 1,
    };
    let mut seen = BitVector::zeros(width);
    let mut p = PauliString::identity(width);
    for (letter, q) in tokens {
        if seen.get(q) {
            return Err(Error::Duplicate(q));
        }
        seen.set(q, true);
        p.set_letter(q, letter);
    }
    Ok(p)
}
