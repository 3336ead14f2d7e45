use std::ffi::{CStr, CString};
use std::ptr;

use sierpinski_ffi::*;

fn new_ifs(family: SierpFamily, a: f64, b: f64) -> *mut SierpIfs {
    let mut ifs = ptr::null_mut();
    assert_eq!(unsafe { sierp_ifs_new(family, a, b, &mut ifs) }, SierpStatus::Ok);
    assert!(!ifs.is_null());
    ifs
}

fn last_error() -> String {
    let p = sierp_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn equilateral_ratios_and_dimension() {
    let ifs = new_ifs(SierpFamily::Fff, 1.0, 1.0);
    let mut r = [0.0; 3];
    unsafe {
        assert_eq!(sierp_ifs_ratios(ifs, r.as_mut_ptr()), SierpStatus::Ok);
        assert_eq!(sierp_ifs_check(ifs), SierpStatus::Ok);
        let mut d = 0.0;
        assert_eq!(sierp_moran_dimension(r.as_ptr(), 3, 1e-12, &mut d), SierpStatus::Ok);
        assert!((d - 3f64.ln() / 2f64.ln()).abs() < 1e-10);
        sierp_ifs_free(ifs);
    }
    assert!(r.iter().all(|x| (x - 0.5).abs() < 1e-12));
}

#[test]
fn maps_vertices_and_overlaps() {
    let ifs = new_ifs(SierpFamily::Nnn, 1.0, 1.0);
    unsafe {
        let mut m = SierpAffine::default();
        assert_eq!(sierp_ifs_map(ifs, 1, &mut m), SierpStatus::Ok);
        assert_eq!((m.m11, m.m22, m.tx, m.ty), (0.5, 0.5, 0.5, 0.0));
        assert_eq!(sierp_ifs_map(ifs, 3, &mut m), SierpStatus::OutOfRange);

        let mut v = [SierpPoint::default(); 3];
        assert_eq!(sierp_ifs_vertices(ifs, v.as_mut_ptr()), SierpStatus::Ok);
        assert_eq!(v[1], SierpPoint { x: 1.0, y: 0.0 });
        let mut o = [SierpPoint::default(); 3];
        assert_eq!(sierp_ifs_overlap_points(ifs, o.as_mut_ptr()), SierpStatus::Ok);
        // N is the midpoint of AB
        assert!((o[1].x - 0.5).abs() < 1e-12 && o[1].y.abs() < 1e-12);
        sierp_ifs_free(ifs);
    }
}

#[test]
fn domain_errors_carry_messages() {
    let mut ifs = ptr::null_mut();
    let status = unsafe { sierp_ifs_new(SierpFamily::Fff, 1.4, 2.0, &mut ifs) };
    assert_eq!(status, SierpStatus::FamilyDomainViolation);
    assert!(ifs.is_null());
    assert!(last_error().contains("FFF"));

    let status = unsafe { sierp_ifs_new(SierpFamily::Nnn, 1.0, 3.0, &mut ifs) };
    assert_eq!(status, SierpStatus::DegenerateTriangle);

    let mut d = 0.0;
    let status = unsafe { sierp_dimension_of(SierpFamily::Ffn, 0.6, 0.7, 1e-12, &mut d, ptr::null_mut()) };
    assert_eq!(status, SierpStatus::FamilyDomainViolation);
    let status = unsafe { sierp_moran_dimension([0.5, 0.0].as_ptr(), 2, 1e-12, &mut d) };
    assert_eq!(status, SierpStatus::BracketFailure);
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        assert_eq!(sierp_ifs_new(SierpFamily::Nnn, 1.0, 1.0, ptr::null_mut()), SierpStatus::NullPointer);
        assert_eq!(sierp_ifs_check(ptr::null()), SierpStatus::NullPointer);
        assert_eq!(sierp_cover_len(ptr::null()), 0);
        sierp_ifs_free(ptr::null_mut());
        sierp_string_free(ptr::null_mut());
    }
}

#[test]
fn dimension_of_reports_residual() {
    let (mut d, mut res) = (0.0, f64::NAN);
    let status = unsafe { sierp_dimension_of(SierpFamily::Ffn, 0.2, 1.1, 1e-12, &mut d, &mut res) };
    assert_eq!(status, SierpStatus::Ok);
    assert!((d - 1.44).abs() < 0.01);
    assert!(res <= 1e-12);
}

#[test]
fn chaos_game_fills_buffer() {
    let ifs = new_ifs(SierpFamily::Ffn, 1.1, 0.9);
    let mut a = vec![SierpPoint::default(); 100];
    let mut b = vec![SierpPoint::default(); 100];
    unsafe {
        assert_eq!(sierp_chaos_game(ifs, 100, 9, 20, false, a.as_mut_ptr(), a.len()), SierpStatus::Ok);
        assert_eq!(sierp_chaos_game(ifs, 100, 9, 20, false, b.as_mut_ptr(), b.len()), SierpStatus::Ok);
        assert_eq!(sierp_chaos_game(ifs, 101, 9, 20, false, b.as_mut_ptr(), b.len()), SierpStatus::BufferTooSmall);
        sierp_ifs_free(ifs);
    }
    assert_eq!(a, b);
    assert!(a.iter().all(|p| p.x.is_finite() && p.y >= -1e-12));
}

#[test]
fn cover_handles() {
    let ifs = new_ifs(SierpFamily::Nnn, 1.0, 1.0);
    unsafe {
        let mut cover = ptr::null_mut();
        assert_eq!(sierp_cover_new(ifs, 2, &mut cover), SierpStatus::Ok);
        assert_eq!(sierp_cover_len(cover), 9);
        let mut t = [SierpPoint::default(); 3];
        assert_eq!(sierp_cover_triangle(cover, 8, t.as_mut_ptr()), SierpStatus::Ok);
        assert_eq!(sierp_cover_triangle(cover, 9, t.as_mut_ptr()), SierpStatus::OutOfRange);
        sierp_cover_free(cover);
        assert_eq!(sierp_cover_new(ifs, 13, &mut cover), SierpStatus::DepthCap);
        sierp_ifs_free(ifs);
    }
}

#[test]
fn tiling_handles() {
    let s = 3f64.sqrt() / 2.0;
    let ifs = new_ifs(SierpFamily::Fff, s, s);
    let theta = CString::new("(12)").unwrap();
    unsafe {
        let mut tiling = ptr::null_mut();
        assert_eq!(sierp_tiling_new(ifs, theta.as_ptr(), 3, &mut tiling), SierpStatus::Ok);
        assert_eq!(sierp_tiling_len(tiling), 27);
        let mut tile = SierpTile::default();
        assert_eq!(sierp_tiling_tile(tiling, 0, &mut tile), SierpStatus::Ok);
        assert!(tile.scale > 0.0);
        let mut svg = ptr::null_mut();
        assert_eq!(sierp_tiling_svg(tiling, &mut svg), SierpStatus::Ok);
        assert_eq!(CStr::from_ptr(svg).to_str().unwrap().matches("<polygon").count(), 27);
        sierp_string_free(svg);
        sierp_tiling_free(tiling);

        let bad = CString::new("(4)").unwrap();
        assert_eq!(sierp_tiling_new(ifs, bad.as_ptr(), 3, &mut tiling), SierpStatus::InvalidWord);
        sierp_ifs_free(ifs);
    }
}

#[test]
fn text_round_trip() {
    let ifs = new_ifs(SierpFamily::Fnn, 1.2, 0.8);
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(sierp_ifs_to_text(ifs, &mut text), SierpStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(sierp_ifs_from_text(text, &mut back), SierpStatus::Ok);
        let (mut r1, mut r2) = ([0.0; 3], [0.0; 3]);
        sierp_ifs_ratios(ifs, r1.as_mut_ptr());
        sierp_ifs_ratios(back, r2.as_mut_ptr());
        assert_eq!(r1, r2);
        sierp_string_free(text);
        sierp_ifs_free(back);

        let junk = CString::new("family = NNN\n").unwrap();
        assert_eq!(sierp_ifs_from_text(junk.as_ptr(), &mut back), SierpStatus::Parse);
        sierp_ifs_free(ifs);
    }
}
