//! Values computed independently at 30 digits and frozen here.

use std::f64::consts::PI;

use approx::assert_relative_eq;
use casimir_core::oracle::{
    cutoff_casimir_energy, finite_difference_second_derivative, green_closed, green_closed_neumann, green_mode_sum,
    image_sum_f, profile_energy_integral, CutoffSchedule, SeriesBudget,
};
use casimir_core::verify::subtracted_grid;
use casimir_core::*;

fn st(dim: u32) -> Spacetime {
    Spacetime::new(dim, 1.0).unwrap()
}

#[test]
fn base_energy_densities() {
    let table = [
        (2, -0.130_899_693_899_574_718),
        (3, -0.023_914_162_251_948_146_4),
        (4, -0.006_853_891_945_200_94),
        (5, -0.002_462_408_144_594_96),
        (6, -0.001_025_339_837_311_50),
    ];
    for (dim, value) in table {
        assert_relative_eq!(base_energy_density(&st(dim)), value, max_relative = 1e-13);
    }
}

#[test]
fn profile_function_table() {
    let table: [(u32, [f64; 3]); 3] = [
        (4, [10_002.375_315_147_338_4, 259.757_576_090_673_166, 32.469_697_011_334_145_7]),
        (6, [1_000_002.482_574_258_71, 4_101.927_225_921_298_93, 128.185_225_810_040_592]),
        (8, [100_000_002.798_451_909, 65_546.169_812_601_806_5, 512.079_451_660_951_613]),
    ];
    let budget = SeriesBudget::default();
    for (dim, values) in table {
        for (x, value) in [0.1, 0.25, 0.5].into_iter().zip(values) {
            let s = st(dim);
            assert_relative_eq!(f_profile(&s, x).unwrap(), value, max_relative = 1e-13);
            assert_relative_eq!(f_profile_cot(&s, x).unwrap(), value, max_relative = 1e-12);
            assert_relative_eq!(image_sum_f(dim, x, &budget).unwrap(), value, max_relative = 1e-12);
        }
    }
}

#[test]
fn local_densities() {
    assert_relative_eq!(
        scalar_energy_density(&st(4), ScalarBc::Neumann, 0.5).unwrap(),
        0.198_762_866_410_827_361,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        em_stress(&st(6), EmBc::Metallic, 0.5).unwrap().t00,
        -0.520_872_637_354_243_011,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        single_plate_stress(6, EmBc::Metallic, 1.0).unwrap().t00,
        -0.004_031_441_804_149_936_15,
        max_relative = 1e-13
    );
    assert_relative_eq!(
        specfun::coulomb_potential(5, 1.0).unwrap(),
        0.012_665_147_955_292_221_4,
        max_relative = 1e-13
    );
}

#[test]
fn green_function_forms() {
    let exact = 0.078_907_858_180_103_847_8;
    assert_relative_eq!(green_closed(1.0, 0.3, 0.7, 1.0).unwrap(), exact, max_relative = 1e-14);
    let budget = SeriesBudget::new(1_000, 10_000, 0).unwrap();
    let modes = green_mode_sum(1.0, 0.3, 0.7, 1.0, ScalarBc::Dirichlet, &budget).unwrap();
    assert!((modes - exact).abs() < 1e-6);
    let neumann = green_mode_sum(1.0, 0.3, 0.7, 1.0, ScalarBc::Neumann, &budget).unwrap();
    assert!((neumann - green_closed_neumann(1.0, 0.3, 0.7, 1.0).unwrap()).abs() < 1e-6);
}

#[test]
fn green_solves_its_ode() {
    for neumann in [false, true] {
        let (k, zp) = (2.3, 0.7);
        let g = |z: f64| {
            if neumann {
                green_closed_neumann(k, z, zp, 1.0).unwrap()
            } else {
                green_closed(k, z, zp, 1.0).unwrap()
            }
        };
        let second = finite_difference_second_derivative(g, 0.3, 1e-3).unwrap();
        assert!((second - k * k * g(0.3)).abs() < 1e-6);
    }
}

#[test]
fn cutoff_energies() {
    let budget = SeriesBudget::default();
    let e2 = cutoff_casimir_energy(2, 1.0, &CutoffSchedule::standard(2, 1.0).unwrap(), &budget).unwrap();
    assert_relative_eq!(e2, -PI / 24.0, max_relative = 1e-3);
    let e2_wide = cutoff_casimir_energy(2, 2.0, &CutoffSchedule::standard(2, 2.0).unwrap(), &budget).unwrap();
    assert_relative_eq!(e2_wide, -PI / 48.0, max_relative = 1e-3);
    let e3 = cutoff_casimir_energy(3, 1.0, &CutoffSchedule::standard(3, 1.0).unwrap(), &budget).unwrap();
    assert_relative_eq!(e3, -0.023_914_162_251_948_146_4, max_relative = 1e-3);
}

#[test]
fn subtracted_profile_integrals() {
    let maxwell = Theory::Maxwell(EmBc::Metallic);
    let p4 = subtracted_profile(&st(4), EmBc::Metallic, &subtracted_grid(1.0, 256)).unwrap();
    let r4 = profile_energy_integral(&p4).unwrap();
    assert_eq!(r4.exterior, 0.0);
    assert_relative_eq!(r4.total, -PI * PI / 720.0, max_relative = 1e-12);

    let coarse = subtracted_profile(&st(6), EmBc::Metallic, &subtracted_grid(1.0, 512)).unwrap();
    let fine = subtracted_profile(&st(6), EmBc::Metallic, &subtracted_grid(1.0, 1024)).unwrap();
    let (c, f) = (profile_energy_integral(&coarse).unwrap(), profile_energy_integral(&fine).unwrap());
    assert_relative_eq!(f.total, total_energy_per_area(&st(6), &maxwell), max_relative = 1e-6);
    assert_relative_eq!(f.total, 4.0 * base_energy_density(&st(6)), max_relative = 1e-6);
    assert!(((c.total - f.total) / f.total).abs() < 1e-8);
    // The position-dependent parts cancel between inside and outside.
    assert!(f.exterior.abs() > 1e-2 * f.total.abs());
}
