//! Bit-sequence primitives and hex interchange.
//!
//! [`BitFrame`] is the common currency between the scrambler, the polar
//! codec, the channel model and the metrics: an ordered sequence of binary
//! symbols with an explicit length. [`BeaconPayload`] wraps a frame of
//! exactly [`PAYLOAD_BITS`] bits, the beacon frame size carried end to end
//! by the link.
//!
//! Hex serialization reads each digit MSB-first, digits left to right, and
//! zero-pads the final partial nibble on the right, so
//! `BitFrame::from_hex(&f.to_hex(), f.len())` reproduces `f` for any frame.

use thiserror::Error;

/// Number of bits in a beacon payload frame.
pub const PAYLOAD_BITS: usize = 158;

/// Errors from bit-frame construction and hex parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitsError {
    /// The hex string contained a non-hex character.
    #[error("invalid hex digit {0:?}")]
    InvalidHexDigit(char),
    /// More bits were requested than the hex string encodes.
    #[error("requested {requested} bits but hex string only encodes {available}")]
    NotEnoughBits { requested: usize, available: usize },
    /// A beacon payload must be exactly [`PAYLOAD_BITS`] bits.
    #[error("beacon payload must be {PAYLOAD_BITS} bits, got {0}")]
    PayloadLength(usize),
}

/// Ordered finite sequence of binary symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitFrame {
    bits: Vec<bool>,
}

impl BitFrame {
    /// Frame of `len` zero bits.
    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    /// Number of bits in the frame.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at position `i`. Panics if out of range.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn push(&mut self, value: bool) {
        self.bits.push(value);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Number of positions where `self` and `other` differ.
    /// Panics if lengths differ.
    pub fn hamming_distance(&self, other: &BitFrame) -> usize {
        assert_eq!(self.len(), other.len(), "hamming distance needs equal lengths");
        self.bits
            .iter()
            .zip(other.bits.iter())
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Parses the first `bit_len` bits of a hex string.
    ///
    /// Each digit contributes four bits MSB-first; digits are consumed left
    /// to right. An empty string is accepted only for `bit_len == 0`.
    pub fn from_hex(text: &str, bit_len: usize) -> Result<Self, BitsError> {
        let mut bits = Vec::with_capacity(text.len() * 4);
        for ch in text.chars() {
            let v = ch.to_digit(16).ok_or(BitsError::InvalidHexDigit(ch))? as u8;
            for shift in (0..4).rev() {
                bits.push((v >> shift) & 1 == 1);
            }
        }
        if bit_len > bits.len() {
            return Err(BitsError::NotEnoughBits {
                requested: bit_len,
                available: bits.len(),
            });
        }
        bits.truncate(bit_len);
        Ok(Self { bits })
    }

    /// Hex rendering, `ceil(len/4)` uppercase digits, final partial nibble
    /// zero-padded on the right.
    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.bits.len().div_ceil(4));
        for chunk in self.bits.chunks(4) {
            let mut v = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                if b {
                    v |= 1 << (3 - i);
                }
            }
            out.push(char::from_digit(v as u32, 16).unwrap().to_ascii_uppercase());
        }
        out
    }
}

impl From<Vec<bool>> for BitFrame {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl FromIterator<bool> for BitFrame {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

/// Beacon frame payload: a [`BitFrame`] of exactly [`PAYLOAD_BITS`] bits.
///
/// The payload is treated as opaque; no internal field structure is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeaconPayload {
    frame: BitFrame,
}

impl BeaconPayload {
    pub fn new(frame: BitFrame) -> Result<Self, BitsError> {
        if frame.len() != PAYLOAD_BITS {
            return Err(BitsError::PayloadLength(frame.len()));
        }
        Ok(Self { frame })
    }

    pub fn frame(&self) -> &BitFrame {
        &self.frame
    }

    pub fn into_frame(self) -> BitFrame {
        self.frame
    }
}
