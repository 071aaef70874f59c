//! Rank and nullspace over F2, and homogenization of a system with b != 0.
use solgroup::{F2Matrix, LinSystem};

fn main() {
    let m = F2Matrix::from_u8_rows(&[[1, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0]]).unwrap();
    println!("rank={} nullity={}", m.rank(), m.nullity());
    for v in m.nullspace_basis() {
        let bits: String = v.iter().map(|&b| if b { '1' } else { '0' }).collect();
        println!("kernel {bits}");
    }

    let sys: LinSystem = "2 3\n110\n011\nb 10\n".parse().unwrap();
    let h = sys.homogenize();
    print!("{}", h.to_text());
    println!("solutions correspond: {}", sys.solve_correspondence_check().unwrap());
}
