// Built-in system texts.  Every operator, field and chart map below was checked symbolically before being
// transcribed; the manifests re-check them numerically on every run.
#include "haantjes/error.hpp"
#include <string>

namespace haantjes {

namespace {

const char* kDrachHolt = R"(
[meta]
name = drach-holt
description = Holt-type potential with three parameters, separated in the eigenvalue chart of KDH
params = k1=0.5, k2=1, k3=-0.3

[constants]
s = sqrt(2*k1)
c0 = -sqrt(2/k1)/576
b1 = 10368*sqrt(2*k1^3)
b2 = k1/18
b3 = 216*sqrt(2*k1)*k2
b4 = sqrt(2*k1)/26873856
b5 = k2/1728
b6 = -1/216
b7 = 18*sqrt(2*k1)*k3

[chart.cartesian]
vars = x, y, p_x, p_y

[chart.lammu]
vars = lam1, lam2, mu1, mu2
parent = cartesian
to_ref = (P^4 + 108*k1*P^2*W^4 + 324*k1^2*W^8 - (mu1 + mu2)/(2*c0))/(24*s); W^3; P;
         ((mu1 - mu2)/c0 - 24*s*P^3*W^2 - 432*s*k1*P*W^6)/(24*W)
from_ref = l1; l2; m1; m2

[let.lammu]
W = sqrt((lam2 - lam1)/(36*s))
P = -(lam1 + lam2)/12

[let.cartesian]
Y = cbrt(y)

[hamiltonian]
H1 = (p_x^2 + p_y^2)/2 + k1*(4*x^2 + 3*y^2)/Y^2 + k2*x/Y^2 + k3/Y^2

[integrals]
H2 = 2*p_x^3 + 3*p_x*p_y^2 + 12*k1*((2*x^2 - 3*y^2)/Y^2*p_x + 6*x*Y*p_y) + k2*(6*x/Y^2*p_x + 9*Y*p_y)
     + 6*k3/Y^2*p_x

[functions]
l1 = -6*(p_x + 3*s*Y^2)
l2 = -6*(p_x - 3*s*Y^2)
m1 = c0*(p_x^4 + 12*s*p_x^3*Y^2 + 108*k1*p_x^2*Y^4 + 216*s*k1*p_x*y^2 + 12*p_y*Y - 24*s*x + 324*k1^2*Y^8)
m2 = c0*(p_x^4 - 12*s*p_x^3*Y^2 + 108*k1*p_x^2*Y^4 - 216*s*k1*p_x*y^2 - 12*p_y*Y - 24*s*x + 324*k1^2*Y^8)
H2bad = H2 + x*p_y

[separation]
S1 = b1*m1^2 + (b2*l1^4 + b3)*m1 + b4*l1^8 + b5*l1^4 + b6*l1^3 + l1*H1 + H2 + b7
S2 = b1*m2^2 + (b2*l2^4 + b3)*m2 + b4*l2^8 + b5*l2^4 - b6*l2^3 - l2*H1 - H2 + b7

[operator.KDH]
e_1_1 = 6*p_x
e_1_2 = 3*p_y
e_1_4 = 9*y
e_2_2 = 6*p_x
e_2_3 = -9*y
e_3_2 = -72*k1*Y
e_3_3 = 6*p_x
e_4_1 = 72*k1*Y
e_4_3 = 3*p_y
e_4_4 = 6*p_x

[domain]
x = 0.2, 2
y = 0.2, 2
p_x = -2, 2
p_y = -2, 2

[manifest]
claim = haantjes KDH
claim = omega KDH
claim = chain KDH H1 H2 tol=1e-9
claim = spectrum KDH l1 l2
claim = minpoly KDH 2
claim = semisimple KDH yes
claim = doubled KDH
claim = powers KDH
claim = inverse KDH
claim = chart lammu
claim = canonical lammu
claim = diagonal KDH lammu
claim = involution H1 H2
claim = benenti H1 H2 lammu
claim = vanishes S1
claim = vanishes S2
claim = fit-chain H1 H2 1 x y Y p_x p_y
claim = expect-fail chain KDH H1 H2bad
claim = expect-fail benenti H1 H2bad lammu
claim = info nijenhuis KDH
)";

const char* kSW1 = R"(
[meta]
name = sw1
description = Smorodinsky-Winternitz I: separable in cartesian, polar and elliptic coordinates
params = a=1, c=1, c1=0.7, c2=0.7

[chart.cartesian]
vars = x, y, p_x, p_y

[let.cartesian]
d1 = sqrt((x + c)^2 + y^2)
d2 = sqrt((x - c)^2 + y^2)
ech = (d1 + d2)/(2*c)
ecv = (d1 - d2)/(2*c)
esh = sqrt(ech^2 - 1)
esv = sqrt(1 - ecv^2)

[chart.polar]
vars = r, theta, p_r, p_theta
parent = cartesian
to_ref = r*cos(theta); r*sin(theta); cos(theta)*p_r - sin(theta)*p_theta/r; sin(theta)*p_r + cos(theta)*p_theta/r
from_ref = sqrt(x^2 + y^2); atan2(y, x); (x*p_x + y*p_y)/sqrt(x^2 + y^2); x*p_y - y*p_x

[let.elliptic]
chu = (exp(u) + exp(-u))/2
shu = (exp(u) - exp(-u))/2
ea = c*shu*cos(v)
eb = c*chu*sin(v)

[chart.elliptic]
vars = u, v, p_u, p_v
parent = cartesian
to_ref = c*chu*cos(v); c*shu*sin(v); (ea*p_u - eb*p_v)/(ea^2 + eb^2); (eb*p_u + ea*p_v)/(ea^2 + eb^2)
from_ref = log(ech + esh); atan2(esv, ecv); c*(esh*ecv*p_x + ech*esv*p_y); c*(-ech*esv*p_x + esh*ecv*p_y)

[hamiltonian]
H = (p_x^2 + p_y^2)/2 + a*(x^2 + y^2)/2 + c1/x^2 + c2/y^2

[integrals]
H2 = p_y^2/2 + a*y^2/2 + c2/y^2
H3 = 2*(c^2*p_x^2 + (x*p_y - y*p_x)^2 + a*c^2*x^2 + 2*c1*(y^2 + c^2)/x^2 + 2*c2*(x/y)^2)

[operator.K2]
e_2_2 = 1
e_4_4 = 1

[operator.K3]
e_1_1 = 4*(y^2 + c^2)
e_1_2 = -4*x*y
e_2_1 = -4*x*y
e_2_2 = 4*x^2
e_3_2 = -4*(x*p_y - y*p_x)
e_3_3 = 4*(y^2 + c^2)
e_3_4 = -4*x*y
e_4_1 = 4*(x*p_y - y*p_x)
e_4_3 = -4*x*y
e_4_4 = 4*x^2

[domain]
x = 0.2, 2
y = 0.2, 2
p_x = -2, 2
p_y = -2, 2

[manifest]
claim = haantjes K2
claim = omega K2
claim = haantjes K3
claim = omega K3
claim = chain K2 H H2
claim = chain K3 H H3
claim = involution H H2
claim = involution H H3
claim = minpoly K3 2
claim = doubled K3
claim = algebra K2
claim = algebra K3
claim = chart polar
claim = chart elliptic
claim = diagonal K2 cartesian
claim = diagonal K3 elliptic
claim = diagonal K3 polar c=0
claim = expect-fail diagonal K3 polar
claim = benenti H H3 elliptic
claim = info lift K3
claim = info nijenhuis K3
)";

const char* kSW2 = R"(
[meta]
name = sw2
description = Smorodinsky-Winternitz II: separable in cartesian and parabolic coordinates
params = a=1, c1=0.7, c2=0.7

[chart.cartesian]
vars = x, y, p_x, p_y

[let.cartesian]
rr = sqrt(x^2 + y^2)

[chart.parabolic]
vars = xi, eta, p_xi, p_eta
parent = cartesian
to_ref = (xi^2 - eta^2)/2; xi*eta; (xi*p_xi - eta*p_eta)/(xi^2 + eta^2); (eta*p_xi + xi*p_eta)/(xi^2 + eta^2)
from_ref = sqrt(rr + x); sqrt(rr - x); sqrt(rr + x)*p_x + sqrt(rr - x)*p_y; -sqrt(rr - x)*p_x + sqrt(rr + x)*p_y

[hamiltonian]
H = (p_x^2 + p_y^2)/2 + a*(4*x^2 + y^2) + c1*x + c2/y^2

[integrals]
H2 = p_y^2/2 + a*y^2 + c2/y^2
H3 = p_y*(y*p_x - x*p_y) + 2*a*x*y^2 + c1*y^2/2 - 2*c2*x/y^2

[operator.K2]
e_2_2 = 1
e_4_4 = 1

[operator.K3]
e_1_2 = y
e_2_1 = y
e_2_2 = -2*x
e_3_2 = p_y
e_3_4 = y
e_4_1 = -p_y
e_4_3 = y
e_4_4 = -2*x

[domain]
x = 0.2, 2
y = 0.2, 2
p_x = -2, 2
p_y = -2, 2

[manifest]
claim = haantjes K2
claim = omega K2
claim = haantjes K3
claim = omega K3
claim = chain K2 H H2
claim = chain K3 H H3
claim = involution H H2
claim = involution H H3
claim = minpoly K3 2
claim = doubled K3
claim = chart parabolic
claim = diagonal K2 cartesian
claim = diagonal K3 parabolic
claim = benenti H H3 parabolic
claim = info lift K3
)";

const char* kSW3 = R"(
[meta]
name = sw3
description = Smorodinsky-Winternitz III: separable in polar and parabolic coordinates
params = alpha=1, beta=0.7, gamma=0.3

[chart.cartesian]
vars = x, y, p_x, p_y

[let.cartesian]
rr = sqrt(x^2 + y^2)

[chart.polar]
vars = r, theta, p_r, p_theta
parent = cartesian
to_ref = r*cos(theta); r*sin(theta); cos(theta)*p_r - sin(theta)*p_theta/r; sin(theta)*p_r + cos(theta)*p_theta/r
from_ref = rr; atan2(y, x); (x*p_x + y*p_y)/rr; x*p_y - y*p_x

[chart.parabolic]
vars = xi, eta, p_xi, p_eta
parent = cartesian
to_ref = (xi^2 - eta^2)/2; xi*eta; (xi*p_xi - eta*p_eta)/(xi^2 + eta^2); (eta*p_xi + xi*p_eta)/(xi^2 + eta^2)
from_ref = sqrt(rr + x); sqrt(rr - x); sqrt(rr + x)*p_x + sqrt(rr - x)*p_y; -sqrt(rr - x)*p_x + sqrt(rr + x)*p_y

[functions.polar]
H = (p_r^2 + p_theta^2/r^2)/2 + alpha/r + (beta + gamma*cos(theta))/(r^2*sin(theta)^2)
H2 = p_theta^2/2 + (beta + gamma*cos(theta))/sin(theta)^2
H3 = -p_theta*(p_theta*cos(theta)/r + p_r*sin(theta)) - alpha*cos(theta)
     - (gamma + 2*beta*cos(theta) + gamma*cos(theta)^2)/(r*sin(theta)^2)

[operator.K2]
chart = polar
e_2_2 = r^2
e_4_4 = r^2

[operator.K3]
chart = polar
e_1_2 = -r^2*sin(theta)
e_2_1 = -sin(theta)
e_2_2 = -2*r*cos(theta)
e_3_2 = -p_theta*cos(theta)
e_3_4 = -sin(theta)
e_4_1 = p_theta*cos(theta)
e_4_3 = -r^2*sin(theta)
e_4_4 = -2*r*cos(theta)

# the cartesian operators the two structures are compared with
[operator.SWI_K3c0]
e_1_1 = 4*y^2
e_1_2 = -4*x*y
e_2_1 = -4*x*y
e_2_2 = 4*x^2
e_3_2 = -4*(x*p_y - y*p_x)
e_3_3 = 4*y^2
e_3_4 = -4*x*y
e_4_1 = 4*(x*p_y - y*p_x)
e_4_3 = -4*x*y
e_4_4 = 4*x^2

[operator.SWII_K3]
e_1_2 = y
e_2_1 = y
e_2_2 = -2*x
e_3_2 = p_y
e_3_4 = y
e_4_1 = -p_y
e_4_3 = y
e_4_4 = -2*x

[domain]
x = 0.2, 2
y = 0.2, 2
p_x = -2, 2
p_y = -2, 2

[manifest]
claim = haantjes K2
claim = omega K2
claim = haantjes K3
claim = omega K3
claim = chain K2 H H2
claim = chain K3 H H3
claim = involution H H2
claim = involution H H3
claim = doubled K3
claim = chart polar
claim = chart parabolic
claim = diagonal K2 polar
claim = diagonal K3 parabolic
claim = proportional K2 SWI_K3c0 cartesian
claim = proportional K3 SWII_K3 cartesian expect=1
claim = info lift K3
)";

const char* kSW4 = R"(
[meta]
name = sw4
description = Smorodinsky-Winternitz IV: separable in two parabolic systems with distinct axes
params = alpha=1, beta=0.7, gamma=0.3

[chart.cartesian]
vars = x, y, p_x, p_y

[let.cartesian]
rr = sqrt(x^2 + y^2)

[chart.parabolic]
vars = xi, eta, p_xi, p_eta
parent = cartesian
to_ref = (xi^2 - eta^2)/2; xi*eta; (xi*p_xi - eta*p_eta)/(xi^2 + eta^2); (eta*p_xi + xi*p_eta)/(xi^2 + eta^2)
from_ref = sqrt(rr + x); sqrt(rr - x); sqrt(rr + x)*p_x + sqrt(rr - x)*p_y; -sqrt(rr - x)*p_x + sqrt(rr + x)*p_y

# parabolic coordinates with the axis along y: (xi, eta) rotated by pi/4
[chart.parabolic_y]
vars = s, t, p_s, p_t
parent = parabolic
to_ref = (s + t)/sqrt(2); (s - t)/sqrt(2); (p_s + p_t)/sqrt(2); (p_s - p_t)/sqrt(2)
from_ref = (xi + eta)/sqrt(2); (xi - eta)/sqrt(2); (p_xi + p_eta)/sqrt(2); (p_xi - p_eta)/sqrt(2)

[let.parabolic]
S = xi^2 + eta^2

[functions.parabolic]
H = (p_xi^2 + p_eta^2)/(2*S) + (2*alpha + beta*xi + gamma*eta)/S
H2 = (gamma*xi^3 + xi^2*(p_xi*p_eta - beta*eta) - xi*eta*(p_xi^2 + p_eta^2 + 4*alpha + gamma*eta)
     + eta^2*(p_xi*p_eta + beta*eta))/S
H3 = (xi^2*(p_eta^2 + 2*(alpha + gamma*eta)) - 2*beta*xi*eta^2 - eta^2*(p_xi^2 + 2*alpha))/S

[operator.K2]
chart = parabolic
e_1_1 = -2*xi*eta
e_1_2 = S
e_2_1 = S
e_2_2 = -2*xi*eta
e_3_3 = -2*xi*eta
e_3_4 = S
e_4_3 = S
e_4_4 = -2*xi*eta

[operator.K3]
chart = parabolic
e_1_1 = -2*eta^2
e_2_2 = 2*xi^2
e_3_3 = -2*eta^2
e_4_4 = 2*xi^2

[operator.SWII_K3]
e_1_2 = y
e_2_1 = y
e_2_2 = -2*x
e_3_2 = p_y
e_3_4 = y
e_4_1 = -p_y
e_4_3 = y
e_4_4 = -2*x

[domain]
x = 0.2, 2
y = 0.2, 2
p_x = -2, 2
p_y = -2, 2

[manifest]
claim = haantjes K2
claim = omega K2
claim = haantjes K3
claim = omega K3
claim = chain K2 H H2
claim = chain K3 H H3
claim = involution H H2
claim = involution H H3
claim = doubled K2
claim = inverse K2
claim = chart parabolic
claim = chart parabolic_y
claim = diagonal K3 parabolic
claim = diagonal K2 parabolic_y
claim = proportional K3 SWII_K3 cartesian expect=-2
claim = info lift K2
claim = info lift K3
)";

const char* kAnisoRosochatius = R"(
[meta]
name = aniso-rosochatius
description = anisotropic oscillator with Rosochatius terms, frequency ratio 1:3
params = nu=1, c1=0.7, c2=0.7

[constants]
n1 = 1
n2 = 3

[chart.cartesian]
vars = x, y, p_x, p_y

[hamiltonian]
H = (p_x^2 + p_y^2 + nu^2*(n1^2*x^2 + n2^2*y^2) + c1/x^2 + c2/y^2)/2

[integrals]
E1 = (p_x^2 + nu^2*n1^2*x^2 + c1/x^2)/2
E2 = (p_y^2 + nu^2*n2^2*y^2 + c2/y^2)/2
RePsi=9*nu^8*x^6*y^2 + 27*c1^2*nu^4*y^2/x^2 - 27*c1*x^2*nu^6*y^2 + c1^3*c2/(x^6*y^2) - 9*c1^3*nu^2*y^2/x^6 - nu^6*x^6*c2/y^2 - 3*c1^2*nu^2*c2/(x^2*y^2) + 3*c1*x^2*nu^4*c2/y^2 + (162*c1*nu^4*y^2 - 135*nu^6*x^4*y^2 + 3*c1^2*c2/(x^4*y^2) - 27*c1^2*nu^2*y^2/x^4 - 18*c1*nu^2*c2/y^2 + 15*nu^4*x^4*c2/y^2)*p_x^2 + (c1^3/x^6 - nu^6*x^6 - 3*c1^2*nu^2/x^2 + 3*c1*x^2*nu^4)*p_y^2 + (3*c1^2/x^4 - 18*c1*nu^2 + 15*nu^4*x^4)*p_x^2*p_y^2 + p_x^6*p_y^2 + (36*c1^2*nu^2*y/x^3 - 72*c1*x*nu^4*y + 36*nu^6*x^5*y)*p_y*p_x + (135*nu^4*x^2*y^2 + 3*c1*c2/(x^2*y^2) - 27*c1*nu^2*y^2/x^2 - 15*nu^2*x^2*c2/y^2)*p_x^4 + (c2/y^2 - 9*nu^2*y^2)*p_x^6 + (72*c1*nu^2*y/x - 120*nu^4*x^3*y)*p_y*p_x^3 + (3*c1/x^2 - 15*nu^2*x^2)*p_x^4*p_y^2 + 36*nu^2*p_x^5*x*p_y*y

[let.cartesian]
m_d=-270*nu^6*x^4*y^2 + 324*c1*nu^4*y^2 + 30*nu^4*x^4*c2/y^2 - 54*c1^2*nu^2*y^2/x^4 - 36*c1*nu^2*c2/y^2 + 6*c1^2*c2/(x^4*y^2) + (540*nu^4*x^2*y^2 - 108*c1*nu^2*y^2/x^2 - 60*nu^2*x^2*c2/y^2 + 12*c1*c2/(x^2*y^2))*p_x^2 + (30*nu^4*x^4 - 36*c1*nu^2 + 6*c1^2/x^4)*p_y^2 + (-60*nu^2*x^2 + 12*c1/x^2)*p_x^2*p_y^2 + (p_y/p_x)*(36*nu^2*c1^2*y/x^3 - 72*c1*x*nu^4*y + 36*nu^6*x^5*y) + 180*p_x^3*x*y*nu^2*p_y + (-360*nu^4*x^3*y + 216*c1*nu^2*y/x)*p_x*p_y + (-54*nu^2*y^2 + 6*c2/y^2)*p_x^4 + 6*p_x^4*p_y^2
m_21=36*nu^2*c1^2*y/x^3 - 72*c1*x*nu^4*y + 36*nu^6*x^5*y + (72*c1*nu^2*y/x - 120*nu^4*x^3*y)*p_x^2 + (360*nu^4*x^3*y - 216*c1*nu^2*y/x)*p_y^2 + (p_y/p_x)*(36*c1*nu^2*c2/y^2 - 2*nu^6*x^6 + 270*nu^6*x^4*y^2 + 2*c1^3/x^6 + 6*c1*x^2*nu^4 - 324*c1*nu^4*y^2 - 30*nu^4*x^4*c2/y^2 - 6*c1^2*nu^2/x^2 + 54*c1^2*nu^2*y^2/x^4 - 6*c1^2*c2/(x^4*y^2)) + (-30*nu^2*x^2 + 54*nu^2*y^2 + 6*c1/x^2 - 6*c2/y^2)*p_y*p_x^3 + (60*nu^2*x^2 - 12*c1/x^2)*p_y^3*p_x - 6*p_y^3*p_x^3 + 2*p_x^5*p_y - 180*p_x^2*y*x*nu^2*p_y^2 + (30*nu^4*x^4 - 540*nu^4*x^2*y^2 + 6*c1^2/x^4 - 36*c1*nu^2 + 108*c1*nu^2*y^2/x^2 + 60*nu^2*x^2*c2/y^2 - 12*c1*c2/(x^2*y^2))*p_x*p_y + (p_y^3/p_x)*(-30*nu^4*x^4 - 6*c1^2/x^4 + 36*c1*nu^2) + 36*p_x^4*y*x*nu^2 + (p_y^2/p_x^2)*(-36*nu^6*x^5*y + 72*c1*x*nu^4*y - 36*nu^2*c1^2*y/x^3)
m_32=(324*y*nu^4*c1 + 972*y^3*nu^4*c1/x^2 - 30*nu^4*x^4*c2/y^3 + 1080*nu^4*x^2*c2/y - 54*y*nu^2*c1^2/x^4 - 60*nu^2*x^2*c2^2/y^5 - 6*c1^2*c2/(x^4*y^3))*p_x + (12*c1*c2^2/(x^2*y^5) + 36*c1*nu^2*c2/y^3 - 216*c1*nu^2*c2/(x^2*y) - 270*x^4*y*nu^6 - 4860*x^2*y^3*nu^6)*p_x + (216*c1*nu^2*c2/(x*y^2) + 36*nu^6*x^5 + 3240*x^3*y^2*nu^6 + 36*nu^2*c1^2/x^3 - 72*c1*x*nu^4 - 1944*c1*nu^4*y^2/x - 360*nu^4*x^3*c2/y^2)*p_y + (-54*c1*nu^2*y/x^2 + 30*nu^2*x^2*c2/y^3 - 108*c2*nu^2/y - 6*c1*c2/(x^2*y^3) + 270*nu^4*x^2*y + 486*y^3*nu^4 + 6*c2^2/y^5)*p_x^3 + (1/p_x)*(-54*c1*x^2*nu^6*y - 2916*y^3*nu^6*c1 + 2*nu^6*x^6*c2/y^3 - 540*nu^6*x^4*c2/y + 54*c1^2*nu^4*y/x^2 + 486*y^3*nu^4*c1^2/x^4 + 30*nu^4*x^4*c2^2/y^5 - 18*c1^3*nu^2*y/x^6) + (1/p_x)*(-2*c1^3*c2/(x^6*y^3) + 6*c1^2*c2^2/(x^4*y^5) - 6*c1*x^2*nu^4*c2/y^3 + 648*c1*nu^4*c2/y + 6*nu^2*c1^2*c2/(x^2*y^3) - 108*nu^2*c1^2*c2/(x^4*y) - 36*c1*nu^2*c2^2/y^5 + 18*nu^8*x^6*y + 2430*x^4*y^3*nu^8) + (-18*y*nu^2 - 2*c2/y^3)*p_x^5 + (-54*y*nu^2 + 6*c2/y^3)*p_y^2*p_x^3 + (540*nu^4*x^2*y - 60*nu^2*x^2*c2/y^3 + 12*c1*c2/(x^2*y^3) - 108*c1*nu^2*y/x^2)*p_x*p_y^2 + (-120*nu^4*x^3 - 1620*nu^4*x*y^2 + 72*c1*nu^2/x + 180*nu^2*x*c2/y^2)*p_x^2*p_y + (p_y/p_x^2)*(-72*c1*x*nu^4*c2/y^2 + 36*nu^2*c1^2*c2/(x^3*y^2) - 324*nu^8*x^5*y^2 - 324*c1^2*nu^4*y^2/x^3 + 648*c1*x*nu^6*y^2 + 36*nu^6*x^5*c2/y^2) + (p_y^2/p_x)*(-36*c1*nu^2*c2/y^3 - 270*x^4*y*nu^6 - 54*y*nu^2*c1^2/x^4 + 6*c1^2*c2/(x^4*y^3) + 324*y*nu^4*c1 + 30*nu^4*x^4*c2/y^3) + 36*p_x^4*x*nu^2*p_y

[operator.K1]
e_1_1 = 1
e_3_3 = 1

[operator.K2]
e_1_1 = m_d
e_2_1 = m_21
e_2_2 = m_d
e_3_2 = m_32
e_3_3 = m_d
e_3_4 = m_21
e_4_1 = -m_32
e_4_4 = m_d

[domain]
x = 0.2, 2
y = 0.2, 2
p_x = -2, 2
p_y = -2, 2
guard = p_x 0.2

[manifest]
claim = haantjes K1
claim = omega K1
claim = haantjes K2
claim = omega K2
claim = chain K1 H E1
claim = chain K2 H RePsi tol=1e-7
claim = involution H E1
claim = involution H RePsi tol=1e-8
claim = semisimple K1 yes
claim = semisimple K2 no
claim = doubled K2
claim = diagonal K1 cartesian
claim = info minpoly K2 2
claim = info nijenhuis K2
)";

// ---------------------------------------------------------------- three-dimensional systems

const char* kCartesian3 = R"(
[chart.cartesian]
vars = x, y, z, p_x, p_y, p_z

[let.cartesian]
R = sqrt(x^2 + y^2 + z^2)
rho = sqrt(x^2 + y^2)
Lx = y*p_z - z*p_y
Ly = z*p_x - x*p_z
Lz = x*p_y - y*p_x
)";

/// spherical polar chart whose polar axis is coordinate a, azimuth measured from b towards c
std::string spherical(const std::string& name, const std::string& axis)
{
    // (a, b, c) and their momenta as positions in (x, y, z)
    const std::string a = axis, b = axis == "z" ? "x" : axis == "y" ? "z" : "y", c = axis == "z" ? "y" : axis == "y" ? "x" : "z";
    auto own = [&](const std::string& v) {
        // cartesian component v in terms of the spherical macros
        if(v == a) return std::string("ca");
        return v == b ? std::string("cb") : std::string("cc");
    };
    auto mom = [&](const std::string& v) {
        if(v == a) return std::string("qa");
        return v == b ? std::string("qb") : std::string("qc");
    };
    std::string s = "\n[let." + name + "]\n"
        "ca = r*cos(th)\ncb = r*sin(th)*cos(ph)\ncc = r*sin(th)*sin(ph)\n"
        "qa = cos(th)*p_r - sin(th)*p_th/r\n"
        "qb = sin(th)*cos(ph)*p_r + cos(th)*cos(ph)*p_th/r - sin(ph)*p_ph/(r*sin(th))\n"
        "qc = sin(th)*sin(ph)*p_r + cos(th)*sin(ph)*p_th/r + cos(ph)*p_ph/(r*sin(th))\n"
        "\n[chart." + name + "]\nvars = r, th, ph, p_r, p_th, p_ph\nparent = cartesian\n";
    s += "to_ref = " + own("x") + "; " + own("y") + "; " + own("z") + "; " + mom("x") + "; " + mom("y") + "; " +
        mom("z") + "\n";
    const std::string pa = "p_" + a, pb = "p_" + b, pc = "p_" + c, rp = "sqrt(" + b + "^2 + " + c + "^2)";
    s += "from_ref = R; atan2(" + rp + ", " + a + "); atan2(" + c + ", " + b + "); (" + a + "*" + pa + " + " + b + "*" +
        pb + " + " + c + "*" + pc + ")/R;\n    (" + a + "*(" + b + "*" + pb + " + " + c + "*" + pc + ") - (" + b +
        "^2 + " + c + "^2)*" + pa + ")/" + rp + "; " + b + "*" + pc + " - " + c + "*" + pb + "\n";
    return s;
}

const char* kRotParabolic = R"(
# rotational parabolic coordinates: x = xi eta cos(ph), y = xi eta sin(ph), z = (xi^2 - eta^2)/2
[let.rotparabolic]
SP = xi^2 + eta^2
PP = (eta*p_xi + xi*p_eta)/SP
QP = p_ph/(xi*eta)

[chart.rotparabolic]
vars = xi, eta, ph, p_xi, p_eta, p_ph
parent = cartesian
to_ref = xi*eta*cos(ph); xi*eta*sin(ph); (xi^2 - eta^2)/2; cos(ph)*PP - sin(ph)*QP; sin(ph)*PP + cos(ph)*QP;
         (xi*p_xi - eta*p_eta)/SP
from_ref = sqrt(R + z); sqrt(R - z); atan2(y, x); sqrt(R - z)*(x*p_x + y*p_y)/rho + sqrt(R + z)*p_z;
           sqrt(R + z)*(x*p_x + y*p_y)/rho - sqrt(R - z)*p_z; x*p_y - y*p_x
)";

const char* kCylindrical = R"(
[chart.cylindrical]
vars = rc, ph, zc, p_rc, p_ph, p_zc
parent = cartesian
to_ref = rc*cos(ph); rc*sin(ph); zc; cos(ph)*p_rc - sin(ph)*p_ph/rc; sin(ph)*p_rc + cos(ph)*p_ph/rc; p_zc
from_ref = rho; atan2(y, x); z; (x*p_x + y*p_y)/rho; x*p_y - y*p_x; p_z
)";

const char* kK2 = R"(
[operator.K2]
e_1_1 = y^2 + z^2
e_1_2 = -x*y
e_1_3 = -x*z
e_2_1 = -x*y
e_2_2 = x^2 + z^2
e_2_3 = -y*z
e_3_1 = -x*z
e_3_2 = -y*z
e_3_3 = x^2 + y^2
e_4_2 = -Lz
e_4_3 = Ly
e_4_4 = y^2 + z^2
e_4_5 = -x*y
e_4_6 = -x*z
e_5_1 = Lz
e_5_3 = -Lx
e_5_4 = -x*y
e_5_5 = x^2 + z^2
e_5_6 = -y*z
e_6_1 = -Ly
e_6_2 = Lx
e_6_4 = -x*z
e_6_5 = -y*z
e_6_6 = x^2 + y^2
)";

const char* kK3 = R"(
[operator.K3]
e_1_1 = y^2
e_1_2 = -x*y
e_2_1 = -x*y
e_2_2 = x^2
e_4_2 = -Lz
e_4_4 = y^2
e_4_5 = -x*y
e_5_1 = Lz
e_5_4 = -x*y
e_5_5 = x^2
)";

const char* kK4 = R"(
[operator.K4]
e_1_1 = z^2
e_1_3 = -x*z
e_3_1 = -x*z
e_3_3 = x^2
e_4_3 = Ly
e_4_4 = z^2
e_4_6 = -x*z
e_6_1 = -Ly
e_6_4 = -x*z
e_6_6 = x^2
)";

const char* kK5 = R"(
[operator.K5]
e_1_1 = -2*z
e_1_3 = x
e_2_2 = -2*z
e_2_3 = y
e_3_1 = x
e_3_2 = y
e_4_3 = -p_x
e_4_4 = -2*z
e_4_6 = x
e_5_3 = -p_y
e_5_5 = -2*z
e_5_6 = y
e_6_1 = p_x
e_6_2 = p_y
e_6_4 = x
e_6_5 = y
)";

const char* kK6 = R"(
[operator.K6]
e_2_2 = z^2
e_2_3 = -y*z
e_3_2 = -y*z
e_3_3 = y^2
e_5_3 = -Lx
e_5_5 = z^2
e_5_6 = -y*z
e_6_2 = Lx
e_6_5 = -y*z
e_6_6 = y^2
)";

const char* kDomain3 = R"(
[domain]
x = 0.2, 2
y = 0.2, 2
z = 0.2, 2
p_x = -2, 2
p_y = -2, 2
p_z = -2, 2
)";

std::string kepler_rosochatius()
{
    std::string s = R"(
[meta]
name = kepler-rosochatius
description = Kepler system with Rosochatius terms; a < b < c label the spherical-conical algebra
params = k=1, k1=0.5, k2=1, a=1, b=2, c=3
)";
    s += kCartesian3;
    s += spherical("sph_z", "z") + spherical("sph_y", "y") + spherical("sph_x", "x");
    s += kRotParabolic;
    s += R"(
[hamiltonian]
H1 = (p_x^2 + p_y^2 + p_z^2)/2 - k/R + k1/x^2 + k2/y^2

[integrals]
H2 = (Lx^2 + Ly^2 + Lz^2)/2 + R^2*(k1/x^2 + k2/y^2)
H3 = Lz^2/2 + (x^2 + y^2)*(k1/x^2 + k2/y^2)
H4 = Ly^2/2 + k1*z^2/x^2
H5 = Lx*p_y - p_x*Ly - 2*z*(-k/(2*R) + k1/x^2 + k2/y^2)
H6 = Lx^2/2 + k2*z^2/y^2

[functions]
alpha1_1 = (3*x^2 + 3*y^2 + 2*z^2)/(2*x^2 + 2*y^2 + z^2)
alpha1_2 = -1/(2*x^2 + 2*y^2 + z^2)
beta1_1 = -(x^2 + y^2 + z^2)/(2*x^2 + 2*y^2 + z^2)
beta1_2 = 1/(2*x^2 + 2*y^2 + z^2)
alpha2_1 = (3*x^2 + 2*y^2 + 3*z^2)/(2*x^2 + y^2 + 2*z^2)
alpha2_2 = -1/(2*x^2 + y^2 + 2*z^2)
beta2_1 = -(x^2 + y^2 + z^2)/(2*x^2 + y^2 + 2*z^2)
beta2_2 = 1/(2*x^2 + y^2 + 2*z^2)
alpha3_1 = (2*x^2 + 3*y^2 + 3*z^2)/(x^2 + 2*y^2 + 2*z^2)
alpha3_2 = -1/(x^2 + 2*y^2 + 2*z^2)
beta3_1 = -(x^2 + y^2 + z^2)/(x^2 + 2*y^2 + 2*z^2)
beta3_2 = 1/(x^2 + 2*y^2 + 2*z^2)
alpha4_0 = x^2 + y^2
alpha4_1 = -2*z
alpha4_2 = -1
alpha5_1 = ((b + c)*x^2 + (a + c)*y^2 + (a + b)*z^2)/(b*c*x^2 + a*c*y^2 + a*b*z^2)
alpha5_2 = -1/(c*(b*x^2 + a*y^2) + a*b*z^2)
)";
    s += kK2;
    s += kK3;
    s += kK4;
    s += kK5;
    s += kK6;
    s += R"(
[operator.K7]
combination = a*K6 + b*K4 + c*K3

[operator.L1]
combination = K2 + K3

[operator.L2]
combination = K2 + K4

[operator.L3]
combination = K2 + K6
)";
    s += kDomain3;
    s += R"(
[manifest]
claim = haantjes K2
claim = omega K2
claim = haantjes K3
claim = omega K3
claim = haantjes K4
claim = omega K4
claim = haantjes K5
claim = omega K5
claim = haantjes K6
claim = omega K6
claim = haantjes K7
claim = omega K7
claim = chain K2 H1 H2
claim = chain K3 H1 H3
claim = chain K4 H1 H4
claim = chain K5 H1 H5
claim = chain K6 H1 H6
claim = involution H1 H2
claim = involution H1 H3
claim = involution H2 H3
claim = involution H1 H4
claim = involution H2 H4
claim = involution H1 H5
claim = involution H3 H5
claim = algebra K2 K3 abelian
claim = algebra K2 K4 abelian
claim = algebra K2 K6 abelian
claim = algebra K3 K5 abelian
claim = algebra K2 K7 abelian
claim = semisimple L1 yes
claim = semisimple L2 yes
claim = semisimple L3 yes
claim = semisimple K5 yes
claim = minpoly L1 3
claim = minpoly L2 3
claim = minpoly L3 3
claim = minpoly K5 3
claim = minpoly K7 3
claim = chart sph_z
claim = chart sph_y
claim = chart sph_x
claim = chart rotparabolic
claim = diagonal K2 sph_z
claim = diagonal K3 sph_z
claim = diagonal K2 sph_y
claim = diagonal K4 sph_y
claim = diagonal K2 sph_x
claim = diagonal K6 sph_x
claim = diagonal K3 rotparabolic
claim = diagonal K5 rotparabolic
claim = benenti H1 H2 sph_z
claim = benenti H1 H3 sph_z
claim = benenti H1 H5 rotparabolic
claim = cyclic K2 L1 2 - alpha1_1 alpha1_2
claim = cyclic K3 L1 2 - beta1_1 beta1_2
claim = cyclic K2 L2 2 - alpha2_1 alpha2_2
claim = cyclic K4 L2 2 - beta2_1 beta2_2
claim = cyclic K2 L3 2 - alpha3_1 alpha3_2
claim = cyclic K6 L3 2 - beta3_1 beta3_2
claim = cyclic K3 K5 2 alpha4_0 alpha4_1 alpha4_2
claim = cyclic K2 K7 2 - alpha5_1 alpha5_2
claim = expect-fail involution H2 H5
)";
    return s;
}

std::string gen_kepler(const std::string& F)
{
    std::string s = R"(
[meta]
name = gen-kepler
description = generalized Kepler family with a free function F(y/x)
params = k=1, k1=0.5
)";
    s += kCartesian3;
    s += "u = y/x\nF = " + F + "\n";
    s += spherical("sph_z", "z");
    s += kRotParabolic;
    s += R"(
[hamiltonian]
H1 = (p_x^2 + p_y^2 + p_z^2)/2 - k/R + k1*z/(R*(x^2 + y^2)) + F/(x^2 + y^2)

[integrals]
H2 = (Lx^2 + Ly^2 + Lz^2)/2 + (k1*z*R + R^2*F)/(x^2 + y^2)
H3 = Lz^2/2 + F
H4 = Lx*p_y - p_x*Ly + k*z/R - k1*(x^2 + y^2 + 2*z^2)/(R*(x^2 + y^2)) - 2*z*F/(x^2 + y^2)
)";
    s += kK2;
    s += kK3;
    s += kK5;
    s += kDomain3;
    s += R"(
[manifest]
claim = haantjes K2
claim = haantjes K3
claim = haantjes K5
claim = omega K2
claim = omega K3
claim = omega K5
claim = chain K2 H1 H2
claim = chain K3 H1 H3
claim = chain K5 H1 H4
claim = involution H1 H2
claim = involution H1 H3
claim = involution H2 H3
claim = involution H1 H4
claim = involution H3 H4
claim = algebra K2 K3 abelian
claim = algebra K3 K5 abelian
claim = diagonal K2 sph_z
claim = diagonal K3 sph_z
claim = diagonal K3 rotparabolic
claim = diagonal K5 rotparabolic
)";
    return s;
}

std::string aniso_e3(const std::string& F)
{
    std::string s = R"(
[meta]
name = aniso-e3
description = anisotropic oscillator family in three dimensions with a free function F(y/x)
params = k=1
)";
    s += kCartesian3;
    s += "u = y/x\nF = " + F + "\n";
    s += kCylindrical;
    s += kRotParabolic;
    s += R"(
[hamiltonian]
H1 = (p_x^2 + p_y^2 + p_z^2)/2 + k*(x^2 + y^2) + 4*k*z^2 + F/(x^2 + y^2)

[integrals]
H2 = p_z^2/2 + 4*k*z^2
H3 = Lz^2/2 + F
H4 = Lx*p_y - p_x*Ly + 2*k*z*(x^2 + y^2) - 2*z*F/(x^2 + y^2)

[functions]
alpha6_1 = -1/2
alpha6_2 = 1/2
beta6_1 = 2*(x^2 + y^2)
beta6_2 = -(x^2 + y^2)

[operator.K1]
e_3_3 = 1
e_6_6 = 1
)";
    s += kK3;
    s += kK5;
    s += R"(
[operator.L6]
combination = 2*K1 + K3/(x^2 + y^2)
)";
    s += kDomain3;
    s += R"(
[manifest]
claim = haantjes K1
claim = omega K1
claim = haantjes K3
claim = haantjes K5
claim = chain K1 H1 H2
claim = chain K3 H1 H3
claim = chain K5 H1 H4
claim = involution H1 H2
claim = involution H1 H3
claim = involution H2 H3
claim = involution H1 H4
claim = involution H3 H4
claim = algebra K1 K3 abelian
claim = algebra K3 K5 abelian
claim = minpoly L6 3
claim = chart cylindrical
claim = diagonal K1 cylindrical
claim = diagonal K3 cylindrical
claim = diagonal K3 rotparabolic
claim = diagonal K5 rotparabolic
claim = cyclic K1 L6 2 - alpha6_1 alpha6_2
claim = cyclic K3 L6 2 - beta6_1 beta6_2
)";
    return s;
}

}  // namespace

std::string catalog_source(const std::string& name, const std::string& F)
{
    if(name == "drach-holt") return kDrachHolt;
    if(name == "sw1") return kSW1;
    if(name == "sw2") return kSW2;
    if(name == "sw3") return kSW3;
    if(name == "sw4") return kSW4;
    if(name == "aniso-rosochatius") return kAnisoRosochatius;
    if(name == "kepler-rosochatius") return kepler_rosochatius();
    if(name == "gen-kepler") return gen_kepler(F);
    if(name == "aniso-e3") return aniso_e3(F);
    throw LookupError("unknown catalog system '" + name + "'");
}

}  // namespace haantjes
