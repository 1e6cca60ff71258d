#include "beltrami/verify/displays.hpp"

#include "beltrami/algebra/error.hpp"
#include "beltrami/algebra/format.hpp"

namespace beltrami {

namespace {

// Shorthands expanded inline in the quadric displays.
const std::string kOmega = "(c+a*u^2+b*v^2)";
const std::string kT = "(c+a*(a+1)*u^2+b*(b+1)*v^2)";
const std::string kA = "(a^2*u^2*v^2+(a*u^2+c)^2+a^2*u^2*" + kOmega + ")";
const std::string kB = "(u*v*(c*(a+b)+a*b*(u^2+v^2+" + kOmega + ")))";
const std::string kC = "(b^2*u^2*v^2+(b*v^2+c)^2+b^2*v^2*" + kOmega + ")";
const std::string kG = "(1+a^2*u^2+b^2*v^2)";

std::vector<Display> build() {
  std::vector<Display> d;
  // Ruled surfaces, chart (s, t).
  d.push_back({"K.ruled", "-A^2/(t^2+2*eta*t+zeta)^2"});
  d.push_back({"e4.P1", "-1/A^2*(t^2+2*eta*t+zeta)"});
  d.push_back({"e4.P2", "2/A^3*(mu*t^4+(2*eta*mu+nu)*t^3+(2*eta*nu+xi+zeta*mu)*t^2+(2*eta*xi+zeta*nu)*t+zeta*xi)"});
  d.push_back({"e4.P3", "1/A^3*(mu*t^3+3*eta*mu*t^2+(eta*nu-xi+2*zeta*mu+eta'*A)*t+1/2*zeta'*A-eta*xi+zeta*nu)"});
  d.push_back({"e4.P5",
               "-1/A^4*(mu^2*t^6+(2*mu*nu+2*eta*mu^2)*t^5+(2*mu*xi+nu^2+4*eta*mu*nu+zeta*mu^2+A^2)*t^4"
               "+(2*nu*xi+4*eta*mu*xi+2*eta*nu^2+2*zeta*mu*nu+4*eta*A^2)*t^3"
               "+(xi^2+4*eta*nu*xi+2*zeta*mu*xi+zeta*nu^2+4*eta^2*A^2+2*zeta*A^2)*t^2"
               "+(2*eta*xi^2+2*zeta*nu*xi+4*eta*zeta*A^2)*t+(zeta*xi^2+zeta^2*A^2))"});
  d.push_back({"ruled.P4.t5", "-3*mu^2/A^4"});
  d.push_back({"Q1.t5", "-3*mu^2*rho/A^4"});

  // Quadrics of the first kind, chart (u, v).
  d.push_back({"III.quadric1.e11", "a^2*" + kC + "/" + kOmega + "/" + kT + "^2"});
  d.push_back({"III.quadric1.e12", "-a*b*" + kB + "/" + kOmega + "/" + kT + "^2"});
  d.push_back({"III.quadric1.e22", "b^2*" + kA + "/" + kOmega + "/" + kT + "^2"});
  d.push_back({"e7.note1", "a*u*(5*a*b*(a+1)*u^2+5*a*b*(b+1)*v^2+c*(3*a*b+5*b+a))"});
  d.push_back({"e7.note2", "b*v*(5*a*b*(a+1)*u^2+5*a*b*(b+1)*v^2+c*(3*a*b+5*a+b))"});
  d.push_back({"e7.note3", "(c+a*(a+1)*u^2+a*(b+1)*v^2)*u*" + kOmega});
  d.push_back({"e7.note4", "(c+b*(a+1)*u^2+b*(b+1)*v^2)*v*" + kOmega});
  d.push_back({"e7.note5", "(c*(a+1)+a*(a+1)*u^2+a*(b+1)*v^2)*u*" + kT});
  d.push_back({"e7.note6", "(c*(b+1)+b*(a+1)*u^2+b*(b+1)*v^2)*v*" + kT});
  d.push_back({"e7.f1",
               "-2*u*v*(a*(a+1)^2/c^2*u^4+(a+1)*(a+a*b+2*b)/(b*c)*u^2+(a+b+a*b)/(a*b))"
               "-2*u*v*(b*(b+1)^2/c^2*v^4+(b+1)*(b+a*b+2*a)/(a*c)*v^2)"
               "-2*u*v*((a+1)*(b+1)*(a+b)/c^2*u^2*v^2)"});
  d.push_back({"e7.f2",
               "-(a+1)*(a+3)/c*u^4-(2*a+3)/a*u^2-c/a^2"
               "-(a+1)*(b+1)*(a+b)/c^2*u^4*v^2-b*(b+1)^2/c^2*u^2*v^4"
               "-(b+1)*(a+a*b+2*b)/(a*c)*u^2*v^2-b*(b+1)/a^2*v^2"});
  d.push_back({"e7.f3",
               "-(b+1)*(b+3)/c*v^4-(2*b+3)/b*v^2-c/b^2"
               "-(a+1)*(b+1)*(a+b)/c^2*u^2*v^4-a*(a+1)^2/c^2*u^4*v^2"
               "-(a+1)*(2*a+a*b+b)/(b*c)*u^2*v^2-a*(a+1)/b^2*u^2"});
  d.push_back({"e7.f4",
               "-(a+1)*(a+6*b+2*a*b)/(b*c)*u^3-(2*a*b+a+3*b)/(a*b)*u"
               "-3*(a+1)*(b+1)*(a+b)/c^2*u^3*v^2-3*b*(b+1)^2/c^2*u*v^4"
               "-(b+1)*(4*a+2*a*b+3*b)/(a*c)*u*v^2"});
  d.push_back({"e7.f5",
               "-(b+1)*(6*a+b+2*a*b)/(a*c)*v^3-(2*a*b+3*a+b)/(a*b)*v"
               "-3*(a+1)*(b+1)*(a+b)/c^2*u^2*v^3-3*a*(a+1)^2/c^2*u^4*v"
               "-(a+1)*(3*a+2*a*b+4*b)/(b*c)*u^2*v"});

  // Quadrics of the second kind, chart (u, v).
  d.push_back({"III.quadric2.e11", "a^2/" + kG + "^2*(1+b^2*v^2)"});
  d.push_back({"III.quadric2.e12", "-a^2*b^2/" + kG + "^2*u*v"});
  d.push_back({"III.quadric2.e22", "b^2/" + kG + "^2*(1+a^2*u^2)"});
  d.push_back({"e16.c11", "-" + kG + "*(1+a^2*u^2)/a^2"});
  d.push_back({"e16.c22", "-" + kG + "*(1+b^2*v^2)/b^2"});
  d.push_back({"e16.c12", "-2*u*v*" + kG});
  d.push_back({"e16.c1", "-2*u*" + kG});
  d.push_back({"e16.c2", "-2*v*" + kG});
  d.push_back({"e16.f1", "2*u*v*" + kG});
  d.push_back({"e16.f2", "2*u^2+b^2*u^2*v^2+1/a^2*(1+b^2*v^2)"});
  d.push_back({"e16.f3", "2*v^2+a^2*u^2*v^2+1/b^2*(1+a^2*u^2)"});
  d.push_back({"e16.f4", "2*u*(1+b^2*v^2)"});
  d.push_back({"e16.f5", "2*v*(1+a^2*u^2)"});
  return d;
}

}  // namespace

const std::vector<Display>& displays() {
  static const std::vector<Display> all = build();
  return all;
}

Expr display_expr(std::string_view id) {
  for (const auto& d : displays())
    if (d.id == id) return parse_expr(d.text);
  throw Error(ErrorKind::Usage, "unknown display '" + std::string(id) + "'");
}

}  // namespace beltrami
