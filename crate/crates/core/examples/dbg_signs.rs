use stokes2d::geometry::{build_panels, circle, Orientation};
use stokes2d::quadrature::assembly;
use stokes2d::Vec2;

fn main() {
    let spec = circle(Vec2::zeros(), 1.0, Orientation::Ccw);
    let b = build_panels(&spec, &[vec![16]], 16).unwrap();
    let n = b.n_nodes();
    // constant density c = (1, 0): D[c](x) for x inside / outside
    let c = Vec2::new(1.0, 0.0);
    for pt in [Vec2::new(0.2, 0.1), Vec2::new(2.0, 1.0)] {
        let mut u = Vec2::zeros();
        for j in 0..n {
            u += assembly::dlp_kernel(pt - b.nodes[j], b.normals[j]) * c * b.w_arc[j];
        }
        println!("D[c]({:+.1},{:+.1}) = ({:+.4}, {:+.4})", pt.x, pt.y, u.x, u.y);
    }
    // single layer of constant density at center (for scale checks)
    // jump check: 2D[q] approaching the boundary from inside vs PV
    let q_fun = |y: Vec2| Vec2::new(y.y * y.y + 0.3, y.x * 0.5);
    let theta: f64 = 0.9;
    let x0 = Vec2::new(theta.cos(), theta.sin());
    let x_in = x0 * (1.0 - 1e-6);
    let mut u_in = Vec2::zeros();
    for j in 0..n {
        u_in += assembly::dlp_kernel(x_in - b.nodes[j], b.normals[j]) * q_fun(b.nodes[j]) * b.w_arc[j];
    }
    // PV at x0: plain sum excluding nearest + graded... rough: use far nodes only is wrong;
    // instead compute PV via the solved identity: PV = lim average of inside+outside
    let x_out = x0 * (1.0 + 1e-6);
    let mut u_out = Vec2::zeros();
    for j in 0..n {
        u_out += assembly::dlp_kernel(x_out - b.nodes[j], b.normals[j]) * q_fun(b.nodes[j]) * b.w_arc[j];
    }
    let q0 = q_fun(x0);
    println!("jump D_in - D_out = ({:+.5}, {:+.5})   q(x0) = ({:+.5}, {:+.5})", u_in.x - u_out.x, u_in.y - u_out.y, q0.x, q0.y);
}
