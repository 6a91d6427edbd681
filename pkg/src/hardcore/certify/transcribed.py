"""Polynomials of the overlap analysis, transcribed term by term from their printed displays.

Each is checked against an independent derivation (``derivations``) and a
numeric evaluation of the defining quantities before use.
"""

TRANSCRIBED: dict[str, str] = {
    "W31": (
        "((3/2)*beta-(1/2)*beta^2-delta-(3/2)*alpha*beta+delta*alpha)*gamma+beta"
        "+(5/2)*beta*alpha^2+(1/2)*alpha^3+(3/2)*alpha-(3/2)*alpha^2-(1/2)*beta^2"
        "-1/2+delta*alpha-(7/2)*alpha*beta-delta*alpha^2+beta^2*alpha"
    ),
    "W32": (
        "alpha*beta-(1/2)*beta*gamma-alpha-(1/2)*beta+(1/2)*alpha^2+1/2"
    ),
    "W41": (
        "((3/2)*alpha-(1/2)*alpha^2-gamma-(3/2)*alpha*beta+gamma*beta)*delta+alpha"
        "+(5/2)*alpha*beta^2+(1/2)*beta^3+(3/2)*beta-(3/2)*beta^2-(1/2)*alpha^2-1/2"
        "+gamma*beta-(7/2)*alpha*beta-gamma*beta^2+alpha^2*beta"
    ),
    "W42": (
        "alpha*beta-(1/2)*alpha*delta-beta-(1/2)*alpha+(1/2)*beta^2+1/2"
    ),
    "P11": (
        "1-(1/2)*delta*alpha+17*alpha*beta+(9/2)*delta*gamma-5*beta*gamma+21*alpha*gamma*beta*delta"
        "-(37/2)*alpha^2*gamma*beta*delta-5*alpha*gamma*beta*delta^2+(5/2)*alpha*gamma*beta^2*delta"
        "+8*gamma^2*alpha*delta*beta-5*alpha-3*beta-delta+10*alpha^2+3*beta^2+3*delta*beta"
        "-10*alpha^3+5*alpha^4-beta^3+15*alpha*gamma*beta-(13/2)*alpha*beta*delta"
        "-(27/2)*alpha*gamma*delta-(5/2)*beta*gamma*delta-4*alpha^2*beta*delta+(27/2)*alpha^2*gamma*delta"
        "-15*alpha^2*gamma*beta-24*alpha*gamma*beta^2-8*gamma^2*beta*delta+(17/2)*alpha*beta^2*delta"
        "-(5/2)*beta^2*gamma*delta-3*alpha*beta*delta^2+3*beta*gamma*delta^2+(15/2)*alpha^3*beta*delta"
        "+4*alpha^2*beta*delta^2-(11/2)*alpha^2*beta^2*delta-(9/2)*alpha^3*gamma*delta"
        "+3*alpha^2*gamma*delta^2+5*alpha^3*gamma*beta+17*alpha^2*gamma*beta^2+4*alpha*gamma*beta^3"
        "-3*gamma^2*alpha*delta^2-5*gamma^2*alpha*beta^2+gamma^2*beta*delta^2-3*beta^2*delta"
        "+3*delta^2*alpha-3*delta^2*gamma-3*alpha^2*delta^2+(7/2)*alpha^4*delta-8*alpha^4*beta"
        "-15*alpha^3*beta^2-4*alpha^2*beta^3+3*gamma^2*delta^2-gamma^2*beta^3-33*alpha^2*beta"
        "+(15/2)*alpha^2*delta-16*alpha*beta^2+7*beta^2*gamma-(19/2)*alpha^3*delta"
        "+27*alpha^3*beta+28*alpha^2*beta^2+5*gamma^2*beta^2+4*alpha*beta^3-2*beta^3*gamma"
        "+delta*beta^3-(3/2)*alpha*beta^3*delta+(1/2)*beta^3*gamma*delta-alpha^5"
    ),
    "P12": (
        "-1-(1/2)*delta*alpha-9*alpha*beta-(5/2)*delta*gamma+3*beta*gamma-2*alpha*gamma*beta*delta"
        "+4*alpha+2*beta+delta-6*alpha^2-beta^2-2*delta*beta+4*alpha^3-alpha^4-6*alpha*gamma*beta"
        "+4*alpha*beta*delta+5*alpha*gamma*delta-alpha^2*beta*delta-(5/2)*alpha^2*gamma*delta"
        "+3*alpha^2*gamma*beta+4*alpha*gamma*beta^2+gamma^2*beta*delta-(3/2)*alpha*beta^2*delta"
        "+(1/2)*beta^2*gamma*delta-alpha*gamma*delta^2+beta^2*delta-delta^2*alpha"
        "+delta^2*gamma+alpha^2*delta^2+12*alpha^2*beta-2*alpha^2*delta+4*alpha*beta^2"
        "-2*beta^2*gamma+(3/2)*alpha^3*delta-5*alpha^3*beta-4*alpha^2*beta^2-gamma^2*beta^2"
    ),
    "P21": (
        "-8*delta*alpha+20*alpha*gamma*beta*delta-10*alpha^2*gamma*beta*delta+2*alpha*gamma*beta*delta^2"
        "+12*alpha*gamma*beta^2*delta+2*delta+2*delta^2-8*delta*beta+4*beta^3+34*alpha*beta*delta"
        "-10*beta*gamma*delta-44*alpha^2*beta*delta+8*alpha*beta^2*delta-4*beta^2*gamma*delta"
        "-14*alpha*beta*delta^2-2*beta*gamma*delta^2+18*alpha^3*beta*delta+6*alpha^2*beta*delta^2"
        "-10*alpha^2*beta^2*delta+9*alpha^2*gamma*delta^2-16*alpha*gamma*beta^3-18*alpha*gamma*delta^2"
        "-2*beta^2*delta-15*delta^2*alpha+9*delta^2*gamma+24*alpha^2*delta^2+2*alpha^4*delta"
        "+16*alpha^2*beta^3+4*gamma^2*beta^3+12*alpha^2*delta-8*alpha^3*delta-16*alpha*beta^3"
        "+8*beta^3*gamma-4*delta*beta^3+6*alpha*beta^3*delta-2*beta^3*gamma*delta"
        "+8*delta^2*beta+2*beta^2*delta^2+8*delta^3*alpha-4*delta^3*alpha^2-11*delta^2*alpha^3"
        "-3*delta^2*alpha*beta^2+delta^2*gamma*beta^2-4*delta*gamma^2*beta^2-4*delta^3"
    ),
    "P51": (
        "-1-4*beta*gamma^2*delta*alpha+3*delta*alpha-17*alpha*beta-3*delta*gamma"
        "+5*beta*gamma-14*alpha*beta*gamma*delta+11*alpha^2*beta*gamma*delta+5*alpha"
        "+3*beta-10*alpha^2-3*beta^2-15*alpha*beta*gamma+9*delta*alpha*gamma-3*alpha*beta*delta"
        "+10*alpha^2*beta*delta+15*alpha^2*beta*gamma+24*alpha*beta^2*gamma+3*beta*gamma*delta"
        "+4*beta*gamma^2*delta-9*delta*alpha^2*gamma-7*alpha^3*beta*delta-5*alpha^3*beta*gamma"
        "-17*alpha^2*beta^2*gamma-4*alpha*beta^3*gamma+5*beta^2*gamma^2*alpha+3*delta*alpha^3*gamma"
        "+33*alpha^2*beta-9*delta*alpha^2+16*alpha*beta^2-27*alpha^3*beta-28*alpha^2*beta^2"
        "-7*beta^2*gamma-5*beta^2*gamma^2+9*delta*alpha^3-4*alpha*beta^3+8*alpha^4*beta"
        "+15*alpha^3*beta^2+4*alpha^2*beta^3+2*beta^3*gamma+beta^3*gamma^2-3*delta*alpha^4"
        "+10*alpha^3-5*alpha^4+beta^3+alpha^5"
    ),
    "P52": (
        "1-2*delta*alpha*gamma+6*alpha*beta*gamma-3*alpha^2*beta*gamma-4*alpha*beta^2*gamma"
        "+delta*alpha^2*gamma-4*alpha+6*alpha^2-2*beta-4*alpha^3+alpha^4+beta^2+9*alpha*beta"
        "-3*beta*gamma-delta*alpha+delta*gamma+2*delta*alpha^2-12*alpha^2*beta-4*alpha*beta^2"
        "+5*alpha^3*beta+4*alpha^2*beta^2+2*beta^2*gamma+beta^2*gamma^2-delta*alpha^3"
    ),
    "P71": (
        "(3/2)*alpha^2+4*alpha*beta+(1/2)*beta^2-alpha*delta-gamma*beta+gamma*delta"
        "+1/2-(3/2)*alpha-beta+delta*alpha*beta+(3/2)*gamma*alpha*beta+delta*alpha*beta*gamma"
        "-delta*alpha^2*beta-(3/2)*gamma*alpha*beta^2-(1/2)*gamma*alpha^2*beta-gamma*delta*beta"
        "-gamma*delta*alpha-(1/2)*alpha^3-(9/2)*alpha^2*beta-(5/2)*alpha*beta^2+gamma*beta^2"
        "+alpha^2*delta+(3/2)*alpha^3*beta+(5/2)*alpha^2*beta^2"
    ),
    "P72": (
        "(1/2)*gamma*alpha*beta-1/2+(1/2)*beta+alpha-(1/2)*alpha^2-(1/2)*alpha*beta"
        "-(1/2)*alpha^2*beta"
    ),
    "s1": (
        "-2*gamma*delta+delta*alpha*beta+gamma*alpha*beta-4*delta*alpha*beta*gamma"
        "-2*delta*alpha*beta^2+delta^2*alpha*beta-2*delta*alpha^2*beta+4*delta*alpha^2*beta^2"
        "-2*delta^2*alpha^2*beta-2*gamma*alpha*beta^2-2*gamma*alpha^2*beta+4*gamma*alpha^2*beta^2"
        "+gamma^2*alpha*beta-2*gamma^2*alpha*beta^2+4*gamma*delta*beta-2*gamma*delta*beta^2"
        "+gamma*delta^2*beta+4*gamma*delta*alpha+gamma*delta^2*alpha+gamma^2*delta*beta"
        "-2*gamma*delta*alpha^2+gamma^2*delta*alpha-gamma*delta^2-gamma^2*delta"
    ),
    "qwer": (
        "2*gamma+2*delta-2*alpha^2-2*beta^2-6*alpha*delta-6*gamma*beta+2*gamma*delta"
        "-2*beta*delta-delta^2+6*alpha*beta^2+6*alpha^2*beta-6*alpha^2*beta^2-2*alpha*gamma"
        "-4*alpha^3*beta+2*alpha^2*gamma+2*alpha^2*delta-4*alpha*beta^3+2*beta^2*gamma"
        "+2*beta^2*delta-gamma^2+4*alpha*beta*delta+4*alpha*beta*gamma+2*alpha^3"
        "+2*beta^3-alpha^4-beta^4"
    ),
}
