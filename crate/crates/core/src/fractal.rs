//! Raster rendering of fuzzy determination values across division
//! generations.
//!
//! Band `g` (row band `g - 1`, counted from the top) holds one cell per
//! branch of generation `g`, left to right in first-difference order. Every
//! cell in a band is `2^(depth - g) * cell_size` pixels wide, so each band
//! spans the full image width of `2^depth * cell_size` pixels. A cell is
//! colored by the fuzzy determination (share of `1` decisions) of its branch.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diairesis::PhiNumber;
use crate::truth::TruthValue4;
use crate::Rational;

pub const MAX_DEPTH: u32 = 16;

/// Largest accepted width or height, in pixels.
pub const MAX_DIMENSION: u64 = 1 << 16;

pub type Rgb = [u8; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractalError {
    #[error("depth {0} outside 1..={MAX_DEPTH}")]
    Depth(u32),
    #[error("cell size must be at least 1")]
    CellSize,
    #[error("image of {width}x{height} pixels exceeds {MAX_DIMENSION} in some dimension")]
    DimensionOverflow { width: u64, height: u64 },
    #[error("pixel buffer holds {actual} bytes, expected {expected}")]
    PixelCount { expected: usize, actual: usize },
    #[error("unknown colormap {0:?}")]
    UnknownColormap(String),
}

/// Maps fuzzy values in `[0, 1]` (and the four determination values) to RGB
/// by linear interpolation between two endpoint colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Colormap {
    /// `v ↦ round(255 v)` on every channel.
    #[default]
    Grayscale,
    /// Dark indigo to amber.
    Ember,
}

impl Colormap {
    pub const ALL: [Colormap; 2] = [Colormap::Grayscale, Colormap::Ember];

    pub fn name(self) -> &'static str {
        match self {
            Colormap::Grayscale => "grayscale",
            Colormap::Ember => "ember",
        }
    }

    /// Colors at fuzzy value 0 and 1.
    pub fn endpoints(self) -> (Rgb, Rgb) {
        match self {
            Colormap::Grayscale => ([0, 0, 0], [255, 255, 255]),
            Colormap::Ember => ([24, 16, 64], [255, 196, 40]),
        }
    }

    /// Channels rounded half up. Values outside `[0, 1]` are clamped.
    pub fn fuzzy(self, v: &Rational) -> Rgb {
        let v = v.clone().max(Rational::zero()).min(Rational::one());
        let (lo, hi) = self.endpoints();
        let mut out = [0u8; 3];
        for c in 0..3 {
            let span = BigInt::from(i32::from(hi[c]) - i32::from(lo[c]));
            // round(span * n / d) with halves rounded up
            let num: BigInt = span * v.numer() * 2 + v.denom();
            let q = num.div_floor(&(v.denom() * 2));
            let q: i64 = q.try_into().expect("channel offset fits");
            out[c] = (i64::from(lo[c]) + q) as u8;
        }
        out
    }

    /// `f ↦ 0`, `n ↦ 1/4`, `b ↦ 1/2`, `t ↦ 1` on the fuzzy scale.
    pub fn truth(self, v: TruthValue4) -> Rgb {
        let (n, d) = match v {
            TruthValue4::False => (0, 1),
            TruthValue4::Neither => (1, 4),
            TruthValue4::Both => (1, 2),
            TruthValue4::True => (1, 1),
        };
        self.fuzzy(&Rational::new(n.into(), d.into()))
    }
}

impl fmt::Display for Colormap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Colormap {
    type Err = FractalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Colormap::ALL
            .into_iter()
            .find(|c| {
                c.name().eq_ignore_ascii_case(s) || (s == "gray" && *c == Colormap::Grayscale)
            })
            .ok_or_else(|| FractalError::UnknownColormap(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FractalParams {
    pub depth: u32,
    pub cell_size: u32,
    pub colormap: Colormap,
}

impl FractalParams {
    pub fn new(depth: u32, cell_size: u32) -> FractalParams {
        FractalParams {
            depth,
            cell_size,
            colormap: Colormap::default(),
        }
    }

    pub fn with_colormap(self, colormap: Colormap) -> FractalParams {
        FractalParams { colormap, ..self }
    }

    /// Checks bounds and returns the image `(width, height)`.
    pub fn dimensions(&self) -> Result<(usize, usize), FractalError> {
        if !(1..=MAX_DEPTH).contains(&self.depth) {
            return Err(FractalError::Depth(self.depth));
        }
        if self.cell_size == 0 {
            return Err(FractalError::CellSize);
        }
        let width = (1u64 << self.depth) * u64::from(self.cell_size);
        let height = u64::from(self.depth) * u64::from(self.cell_size);
        if width > MAX_DIMENSION || height > MAX_DIMENSION {
            return Err(FractalError::DimensionOverflow { width, height });
        }
        Ok((width as usize, height as usize))
    }
}

/// Row-major RGB raster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl RasterImage {
    /// All black.
    pub fn new(width: usize, height: usize) -> RasterImage {
        RasterImage {
            width,
            height,
            pixels: vec![0; width * height * 3],
        }
    }

    pub fn from_pixels(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self, FractalError> {
        let expected = width * height * 3;
        if pixels.len() != expected {
            return Err(FractalError::PixelCount {
                expected,
                actual: pixels.len(),
            });
        }
        Ok(RasterImage {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixel(&self, x: usize, y: usize) -> Rgb {
        let i = (y * self.width + x) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn set_pixel(&mut self, x: usize, y: usize, rgb: Rgb) {
        let i = (y * self.width + x) * 3;
        self.pixels[i..i + 3].copy_from_slice(&rgb);
    }

    /// Binary PPM: `P6\n{width} {height}\n255\n` then the raw pixel bytes.
    pub fn encode_ppm(&self) -> Vec<u8> {
        let header = format!("P6\n{} {}\n255\n", self.width, self.height);
        let mut out = Vec::with_capacity(header.len() + self.pixels.len());
        out.extend_from_slice(header.as_bytes());
        out.extend_from_slice(&self.pixels);
        out
    }
}

/// Decision bits read as a binary fraction `0.b₁b₂…`; the root maps to 0.
pub fn branch_to_unit_interval(phi: &PhiNumber) -> Rational {
    let mut numer = BigInt::zero();
    for &b in phi.decision_bits() {
        numer <<= 1u32;
        if b {
            numer += 1;
        }
    }
    Rational::new(numer, BigInt::one() << phi.generation())
}

/// The `2^generation` branches of one generation, in first-difference order.
pub fn generation_branches(generation: u32) -> impl Iterator<Item = PhiNumber> {
    (0u64..1 << generation).map(move |k| {
        PhiNumber::from_decisions((0..generation).rev().map(move |i| (k >> i) & 1 == 1))
    })
}

pub fn render_fractal(params: &FractalParams) -> Result<RasterImage, FractalError> {
    let (width, height) = params.dimensions()?;
    let cell = params.cell_size as usize;
    let mut img = RasterImage::new(width, height);
    let row_bytes = width * 3;

    for g in 1..=params.depth {
        let cell_width = (1usize << (params.depth - g)) * cell;
        let mut row = Vec::with_capacity(row_bytes);
        for phi in generation_branches(g) {
            let fuzzy = phi
                .fuzzy_determination()
                .expect("generation >= 1 has decision bits");
            let rgb = params.colormap.fuzzy(&fuzzy);
            for _ in 0..cell_width {
                row.extend_from_slice(&rgb);
            }
        }
        let top = (g as usize - 1) * cell;
        for y in top..top + cell {
            img.pixels[y * row_bytes..(y + 1) * row_bytes].copy_from_slice(&row);
        }
    }
    Ok(img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn phi(s: &str) -> PhiNumber {
        s.parse().unwrap()
    }

    #[test]
    fn unit_interval_values() {
        assert_eq!(branch_to_unit_interval(&phi("1111")), r(7, 8));
        assert_eq!(branch_to_unit_interval(&phi("1000")), r(0, 1));
        assert_eq!(branch_to_unit_interval(&phi("1")), r(0, 1));
        assert_eq!(branch_to_unit_interval(&phi("101")), r(1, 4));
    }

    #[test]
    fn grayscale_rounding() {
        let g = Colormap::Grayscale;
        assert_eq!(g.fuzzy(&r(0, 1)), [0, 0, 0]);
        assert_eq!(g.fuzzy(&r(1, 1)), [255, 255, 255]);
        // 127.5 rounds up
        assert_eq!(g.fuzzy(&r(1, 2)), [128, 128, 128]);
        // 85.0
        assert_eq!(g.fuzzy(&r(1, 3)), [85, 85, 85]);
        // 170.0
        assert_eq!(g.fuzzy(&r(2, 3)), [170, 170, 170]);
        // 36.43 -> 36
        assert_eq!(g.fuzzy(&r(1, 7)), [36, 36, 36]);
        assert_eq!(g.truth(TruthValue4::True), [255; 3]);
        assert_eq!(g.truth(TruthValue4::False), [0; 3]);
    }

    #[test]
    fn colormap_endpoints() {
        for map in Colormap::ALL {
            let (lo, hi) = map.endpoints();
            assert_eq!(map.fuzzy(&r(0, 1)), lo);
            assert_eq!(map.fuzzy(&r(1, 1)), hi);
            assert_eq!(map.to_string().parse::<Colormap>(), Ok(map));
        }
        assert!("plasma".parse::<Colormap>().is_err());
    }

    #[test]
    fn param_bounds() {
        assert_eq!(
            FractalParams::new(0, 1).dimensions(),
            Err(FractalError::Depth(0))
        );
        assert_eq!(
            FractalParams::new(17, 1).dimensions(),
            Err(FractalError::Depth(17))
        );
        assert_eq!(
            FractalParams::new(3, 0).dimensions(),
            Err(FractalError::CellSize)
        );
        assert_eq!(FractalParams::new(16, 1).dimensions(), Ok((65536, 16)));
        assert!(matches!(
            FractalParams::new(16, 2).dimensions(),
            Err(FractalError::DimensionOverflow { .. })
        ));
        assert_eq!(FractalParams::new(3, 4).dimensions(), Ok((32, 12)));
    }

    #[test]
    fn depth_one_has_two_cells() {
        let img = render_fractal(&FractalParams::new(1, 1)).unwrap();
        assert_eq!((img.width(), img.height()), (2, 1));
        assert_eq!(img.pixels(), &[0, 0, 0, 255, 255, 255]);
    }

    #[test]
    fn ppm_encoding() {
        let white = RasterImage::from_pixels(1, 1, vec![255; 3]).unwrap();
        assert_eq!(white.encode_ppm(), b"P6\n1 1\n255\n\xff\xff\xff");
        let two = RasterImage::new(2, 1).encode_ppm();
        assert_eq!(two.len(), 11 + 6);
        assert!(RasterImage::from_pixels(2, 2, vec![0; 11]).is_err());
    }
}
