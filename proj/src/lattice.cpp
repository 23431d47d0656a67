#include "seifert/lattice.hpp"

#include <utility>

namespace seifert {

namespace {

bool frames_match(std::string const &x, std::string const &y) {
  return x.empty() || y.empty() || x == y;
}

} // namespace

Mat2::Mat2(Integer a11, Integer a12, Integer a21, Integer a22, std::string source,
           std::string target)
    : a{std::move(a11), std::move(a12), std::move(a21), std::move(a22)},
      source_frame(std::move(source)), target_frame(std::move(target)) {}

bool RationalMat2::integral() const {
  for (auto const &x : a)
    if (!is_integral(x))
      return false;
  return true;
}

RationalMat2 to_rational(Mat2 const &m) {
  RationalMat2 r;
  for (int i = 0; i < 4; ++i)
    r.a[i] = Rational(m.a[i]);
  return r;
}

RationalMat2 multiply(RationalMat2 const &x, RationalMat2 const &y) {
  RationalMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

Mat2 compose(Mat2 const &a, Mat2 const &b) {
  if (!frames_match(b.target_frame, a.source_frame))
    throw FrameMismatch("cannot compose: '" + b.target_frame + "' does not feed '" +
                        a.source_frame + "'");
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  r.source_frame = b.source_frame;
  r.target_frame = a.target_frame;
  return r;
}

RationalMat2 invert_rational(Mat2 const &a) {
  Integer det = a.det();
  if (det == 0)
    throw SingularMatrix("matrix " + to_string(a) + " is singular");
  RationalMat2 r;
  r(0, 0) = make_rational(a(1, 1), det);
  r(0, 1) = make_rational(-a(0, 1), det);
  r(1, 0) = make_rational(-a(1, 0), det);
  r(1, 1) = make_rational(a(0, 0), det);
  return r;
}

RationalMat2 solve_conjugate_rational(Mat2 const &torus_proj, Mat2 const &d,
                                      Mat2 const &boundary_proj) {
  Mat2 lhs = compose(torus_proj, d);
  if (!frames_match(boundary_proj.source_frame, d.source_frame))
    throw FrameMismatch("boundary projection starts in '" + boundary_proj.source_frame +
                        "' but the filling starts in '" + d.source_frame + "'");
  return multiply(to_rational(lhs), invert_rational(boundary_proj));
}

Mat2 solve_conjugate(Mat2 const &torus_proj, Mat2 const &d, Mat2 const &boundary_proj) {
  RationalMat2 r = solve_conjugate_rational(torus_proj, d, boundary_proj);
  if (!r.integral())
    throw NonIntegralSolution("projected filling " + to_string(r) + " is not integral");
  Mat2 out(r(0, 0).get_num(), r(0, 1).get_num(), r(1, 0).get_num(), r(1, 1).get_num(),
           boundary_proj.target_frame, torus_proj.target_frame);
  Integer det = out.det();
  if (det != 1 && det != -1)
    throw NonUnimodular("projected filling " + to_string(out) + " has determinant " +
                        to_string(det));
  return out;
}

FillingSlope make_slope(Integer p, Integer q) {
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {q, p};
}

FillingSlope slope_of(Mat2 const &filling) { return make_slope(filling(0, 1), filling(1, 1)); }

Mat2 trivial_filling(Integer const &b) { return Mat2(-1, b, 0, 1); }

LensSpace lens_from_trivial_fillings(Integer const &b) {
  Mat2 flip(1, 0, 0, -1);
  Mat2 gluing = compose(compose(trivial_filling(b), flip), trivial_filling(b));
  // gluing = [[1, -2b], [0, -1]]
  return {-gluing(0, 1), gluing(0, 0), gluing};
}

std::string to_string(Mat2 const &m) {
  return "[[" + to_string(m(0, 0)) + "," + to_string(m(0, 1)) + "],[" + to_string(m(1, 0)) + "," +
         to_string(m(1, 1)) + "]]";
}

std::string to_string(RationalMat2 const &m) {
  return "[[" + to_string(m(0, 0)) + "," + to_string(m(0, 1)) + "],[" + to_string(m(1, 0)) + "," +
         to_string(m(1, 1)) + "]]";
}

} // namespace seifert
