//! Additive LFSR pre-scrambler / descrambler.
//!
//! The scrambler whitens each payload frame by XOR-ing it with the output
//! of a Fibonacci linear-feedback shift register restarted from a fixed
//! seed at every frame boundary. Because the keystream only depends on the
//! configuration, descrambling is the same XOR again: no synchronization
//! state survives between frames.
//!
//! The register is described by a generating polynomial
//! `P(x) = 1 + sum c_q x^q`; the tap set holds the exponents `q >= 1` with
//! `c_q = 1`. The default is `x^15 + x^14 + 1`, a maximal-length polynomial
//! whose state sequence has period `2^15 - 1`. At each step the output is
//! taken from the highest stage, the feedback is the XOR of the tapped
//! stages, and the feedback bit enters stage 1.

use crate::bits::BitFrame;
use thiserror::Error;

/// Default register degree.
pub const DEFAULT_DEGREE: u32 = 15;
/// Default tap exponents, the polynomial `x^15 + x^14 + 1`.
pub const DEFAULT_TAPS: [u32; 2] = [15, 14];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScramblerError {
    #[error("degree must be between 1 and 31, got {0}")]
    BadDegree(u32),
    #[error("tap exponent {tap} outside 1..={degree}")]
    TapOutOfRange { tap: u32, degree: u32 },
    #[error("tap set must contain the degree {0}")]
    MissingDegreeTap(u32),
    #[error("seed must be nonzero")]
    ZeroSeed,
    #[error("seed {seed:#x} does not fit in {degree} bits")]
    SeedTooWide { seed: u32, degree: u32 },
}

/// LFSR configuration: polynomial degree, tap exponents and start state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScramblerConfig {
    degree: u32,
    /// Bit `q - 1` set when stage `q` feeds the XOR.
    tap_mask: u32,
    seed: u32,
}

impl Default for ScramblerConfig {
    /// `x^15 + x^14 + 1` seeded with all ones.
    fn default() -> Self {
        Self::new(DEFAULT_DEGREE, &DEFAULT_TAPS, (1 << DEFAULT_DEGREE) - 1).unwrap()
    }
}

impl ScramblerConfig {
    /// Validates and builds a configuration.
    ///
    /// `taps` lists the exponents `q` with `c_q = 1` (excluding `q = 0`);
    /// it must include the degree itself. `seed` is the initial register
    /// content, low bit = stage 1, and must be a nonzero `degree`-bit value.
    pub fn new(degree: u32, taps: &[u32], seed: u32) -> Result<Self, ScramblerError> {
        if degree == 0 || degree > 31 {
            return Err(ScramblerError::BadDegree(degree));
        }
        let mut tap_mask = 0u32;
        for &tap in taps {
            if tap == 0 || tap > degree {
                return Err(ScramblerError::TapOutOfRange { tap, degree });
            }
            tap_mask |= 1 << (tap - 1);
        }
        if tap_mask & (1 << (degree - 1)) == 0 {
            return Err(ScramblerError::MissingDegreeTap(degree));
        }
        if seed == 0 {
            return Err(ScramblerError::ZeroSeed);
        }
        if seed >> degree != 0 {
            return Err(ScramblerError::SeedTooWide { seed, degree });
        }
        Ok(Self {
            degree,
            tap_mask,
            seed,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn seed(&self) -> u32 {
        self.seed
    }

    /// Tap exponents in descending order.
    pub fn taps(&self) -> Vec<u32> {
        (1..=self.degree)
            .rev()
            .filter(|q| self.tap_mask & (1 << (q - 1)) != 0)
            .collect()
    }

    /// First `n` keystream bits from a register restarted at the seed.
    pub fn keystream(&self, n: usize) -> BitFrame {
        let mut reg = Lfsr::new(self);
        (0..n).map(|_| reg.step()).collect()
    }

    /// XOR of the frame with the keystream prefix of the same length.
    ///
    /// The register restarts from the seed for every call, so scrambling is
    /// an involution and calls on different frames are independent.
    pub fn scramble(&self, frame: &BitFrame) -> BitFrame {
        let mut reg = Lfsr::new(self);
        frame.iter().map(|b| b ^ reg.step()).collect()
    }

    /// Receiver-side inverse; identical to [`scramble`](Self::scramble)
    /// because additive scrambling is self-inverse.
    pub fn descramble(&self, frame: &BitFrame) -> BitFrame {
        self.scramble(frame)
    }
}

/// Fibonacci register state. Bit `q - 1` of `state` holds stage `q`.
struct Lfsr {
    state: u32,
    tap_mask: u32,
    out_bit: u32,
    mask: u32,
}

impl Lfsr {
    fn new(config: &ScramblerConfig) -> Self {
        Self {
            state: config.seed,
            tap_mask: config.tap_mask,
            out_bit: config.degree - 1,
            mask: if config.degree == 31 {
                0x7fff_ffff
            } else {
                (1 << config.degree) - 1
            },
        }
    }

    fn step(&mut self) -> bool {
        let out = (self.state >> self.out_bit) & 1 == 1;
        let feedback = (self.state & self.tap_mask).count_ones() & 1;
        self.state = ((self.state << 1) | feedback) & self.mask;
        out
    }
}
