use symat::ffmat::*;
use symat::qss::*;
use symat::smatroid::*;
fn main() {
    let m = FMatrix::from_rows(
        FieldSpec::gf2(),
        &[
            [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
            [0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1],
            [0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1],
        ],
    )
    .unwrap();
    let t = std::time::Instant::now();
    let s = SymplecticMatroid::bases_from_representation(&m).unwrap();
    println!("rank {} bases {}", s.rank(), s.bases().len());
    let c = s.circuits();
    println!("{} circuits", c.len());
    for x in &c {
        println!("  {x}");
    }
    println!("self dual {:?}", s.is_self_dual());
    let a = induced_access_structure(&s, 1).unwrap();
    println!("{} {}", a, is_quantum_access_structure(&a));
    let r = secret_sharing_report(&s).unwrap();
    for (i, d) in r.dealers.iter().enumerate() {
        println!("dealer {} {}", i + 1, d.is_valid());
    }
    println!("{:?}", t.elapsed());
}
