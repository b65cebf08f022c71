use std::collections::BTreeMap;

use diairesis_core::fractal::{branch_to_unit_interval, generation_branches, render_fractal};
use diairesis_core::{Colormap, FractalParams, RasterImage, Rational};
use image::{ImageFormat, RgbImage};

fn decode(bytes: &[u8]) -> RgbImage {
    image::load_from_memory_with_format(bytes, ImageFormat::Pnm)
        .expect("valid PPM")
        .to_rgb8()
}

#[test]
fn ppm_round_trips_through_a_reference_reader() {
    let img = render_fractal(&FractalParams::new(4, 3).with_colormap(Colormap::Ember)).unwrap();
    let decoded = decode(&img.encode_ppm());
    assert_eq!(decoded.width() as usize, img.width());
    assert_eq!(decoded.height() as usize, img.height());
    assert_eq!(decoded.as_raw(), img.pixels());

    let tiny = RasterImage::from_pixels(2, 1, vec![1, 2, 3, 4, 5, 6]).unwrap();
    assert_eq!(decode(&tiny.encode_ppm()).as_raw(), tiny.pixels());
}

#[test]
fn bands_cover_the_dyadic_grid() {
    for g in 1..=10u32 {
        let values: Vec<Rational> = generation_branches(g)
            .map(|p| branch_to_unit_interval(&p))
            .collect();
        let expected: Vec<Rational> = (0..1i64 << g)
            .map(|k| Rational::new(k.into(), (1i64 << g).into()))
            .collect();
        // already sorted: first-difference order agrees with dyadic position
        assert_eq!(values, expected);
    }
}

#[test]
fn left_half_repeats_the_previous_band() {
    for g in 1..=8u32 {
        let mut previous: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        for p in generation_branches(g) {
            *previous.entry(p.decision_bits().to_vec()).or_default() += 1;
        }
        let mut left: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        for p in generation_branches(g + 1).take(1 << g) {
            assert!(!p.decision_bits()[0]);
            *left.entry(p.decision_bits()[1..].to_vec()).or_default() += 1;
        }
        assert_eq!(left, previous);
    }
}

#[test]
fn all_ones_cell_is_the_unique_brightest() {
    let depth = 6;
    let img = render_fractal(&FractalParams::new(depth, 1)).unwrap();
    for g in 1..=depth {
        let y = (g - 1) as usize;
        let cell_w = 1usize << (depth - g);
        let cells: Vec<u8> = (0..1usize << g)
            .map(|c| img.pixel(c * cell_w, y)[0])
            .collect();
        let max = *cells.iter().max().unwrap();
        assert_eq!(max, 255);
        assert_eq!(cells.iter().filter(|&&v| v == max).count(), 1);
        assert_eq!(cells.last(), Some(&255));
        assert_eq!(cells[0], 0);
        // each cell is uniform across its width
        for c in 0..1usize << g {
            for x in c * cell_w..(c + 1) * cell_w {
                assert_eq!(img.pixel(x, y), img.pixel(c * cell_w, y));
            }
        }
    }
}

#[test]
fn depth_three_bottom_band() {
    let img = render_fractal(&FractalParams::new(3, 1)).unwrap();
    assert_eq!((img.width(), img.height()), (8, 3));
    let bottom: Vec<u8> = (0..8).map(|x| img.pixel(x, 2)[0]).collect();
    // share of ones among 3 decision bits: 0,1/3,1/3,2/3,1/3,2/3,2/3,1
    assert_eq!(bottom, [0, 85, 85, 170, 85, 170, 170, 255]);
}

#[test]
fn rendering_is_deterministic() {
    let p = FractalParams::new(7, 2);
    assert_eq!(render_fractal(&p).unwrap(), render_fractal(&p).unwrap());
}
