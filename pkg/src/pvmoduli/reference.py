"""Published reference values, transcribed as expression strings.

Each matrix is (e11, e12, e21, e22) in the algebra grammar.  Keys are
(chart, component, branch).  Nothing here is computed; the suite compares
these strings against the pipeline output.
"""

from __future__ import annotations
_Q0_DIRECT_E22 = "(-k0 - 1)/x - k1/(x - 1) + t/(x - 1)^2"
_Q1_DIRECT_E22 = "(-k1 - 1)/(x - 1) - k0/x + t/(x - 1)^2"
_A0_E21 = ("rho*(q - 1)/X^2 - phat*(phat - k1 + 1)/((q - 1)*X^2)"
           " + phat^2/((q - 1)^2*X^2) + phat*(phat + k0)/(q*X^2)")

LIMIT_MATRICES: dict[tuple[str, str, str | None], tuple[str, str, str, str]] = {
    ("A0", "f_pullback", None): (
        "0", "1/(X - 1)^2", _A0_E21, "1/(X - 1)^2 + k1/X - k1/(X - 1)"),
    ("Q0", "direct", "minus"): (
        "0", "1/(x*(x - 1)^2)", "alpha*k0 - x*rho", _Q0_DIRECT_E22),
    ("Q0", "direct", "plus"): (
        "0", "1/(x*(x - 1)^2)", "2*k0^2 + (-alpha + t + k1 - 1/x)*k0 - x*rho", _Q0_DIRECT_E22),
    ("Q0", "f_pullback", None): (
        "0", "-1/(X*(X - 1))", "-phat/(X - 1) + (-phat*(phat + k0))/(X - 1)^2",
        "-k0/X + (k0 + 1)/(X - 1)"),
    ("Q1", "f_pullback", None): (
        "0", "1/(X - 1)^2", "P1*((P1 + 2)*X - 1)/((X - 1)^2*X)",
        "1/(X - 1)^2 - 1/X + 1/(X - 1)"),
    ("Q1", "direct", "minus"): (
        "0", "1/(x*(x - 1)^2)", "-rho*(x - 1) + alpha", _Q1_DIRECT_E22),
    ("Q1", "direct", "plus"): (
        "0", "1/(x*(x - 1)^2)", "-t^2 + (k0 + 2*k1 + 1/(x - 1))*t - rho*(x - 1) - alpha",
        _Q1_DIRECT_E22),
    ("B10", "direct", None): (
        "0", "1/(x*(x - 1)^2)", "P10^2 + P10*(A - k1) - rho*(x - 1)",
        "-(k1 + 1)/(x - 1) - k0/x"),
    ("B10", "f_pullback", None): (
        "0", "1/(X - 1)^2", "P10/X + P10*(A + P10 - k1)/X^2",
        "-k1/(X - 1) + (k1 + 1)/X + A/(X - 1)^2"),
    ("B0inf", "f_pullback", None): (
        "0", "-1/((X - 1)*X)",
        "-P0inf*(R + 1)/(R*X - R + X) + P0inf/(X - 1) + P0inf*(P0inf + R - k0)/((X - 1)^2*R)",
        "(-R - 1)/(R*X - R + X) + (k0 + 1)/(X - 1) + 1/(X - 1)^2 - k0/X"),
    ("B0inf", "g_pullback", None): (
        "0", "1/(X - 1)^3", "-rho*(X - 1) + P0inf + P0inf*(P0inf - k0)/R",
        "1/(X - 1)^2 + (-k0 - k1 - 1)/(X - 1)"),
    ("Ainf", "f_pullback", "plus"): (
        "0", "-1/((X - 1)*X)", "Pplus/(X - 1)^2", "-k0/X + k0/(X - 1) + 1/(X - 1)^2"),
    ("Ainf", "f_pullback", "minus"): (
        "0", "-1/((X - 1)*X)", "(Pminus + 1)/(X - 1)^2", "-k0/X + k0/(X - 1) + 1/(X - 1)^2"),
    ("Ainf", "g_pullback", "plus"): (
        "0", "1/(X - 1)^3", "-rho*(X - 1) + Pplus", "(-k0 - k1 - 1)/(X - 1) + 1/(X - 1)^2"),
    # the published (2,2)-entry reads "-κ0 - κ - 1"; κ is taken to be κ1
    ("Ainf", "g_pullback", "minus"): (
        "0", "1/(X - 1)^3", "-rho*(X - 1) + Pminus + 1", "(-k0 - k1 - 1)/(X - 1) + 1/(X - 1)^2"),
    ("Ainf", "h_pullback", None): (
        "0", "-1/(X - 1)^2", "4*q*P1*(P1 + 1)/((q - 1)^2*(X - 1)^2)", "1/(X - 1)^2"),
}

# elm⁻ at the order-two node of the A0 pullback
A0_AFTER_ELM: tuple[str, str, str, str] = (
    "0", "1/(X*(X - 1)^2)",
    "rho*(q - 1)/X - phat*(phat - k1 + 1)/((q - 1)*X) + phat^2/((q - 1)^2*X) + phat*(phat + k0)/(q*X)",
    "1/(X - 1)^2 + (k1 - 1)/X - k1/(X - 1)")

# residual spectral data in the node; values are α₁ up to sign unless noted
NODE_VALUES: dict[str, object] = {
    "A0": "4*rho*(q - 1) + k1^2 - 4*phat*(phat - k1 + 1)/(q - 1) + 4*phat^2/(q - 1)^2"
          " + 4*phat*(phat + k0)/q",                     # squared, both components
    "B10": "(k1 + 1)^2 + 4*P10*(A + P10 - k1)",        # squared, both components
    "Q0": {"minus": "(k0 + 1)^2", "plus": "(k0 - 1)^2"},  # squared
    "Q1": {"f_pullback": ("1",), "direct": ("k1 - 1", "k1 + 1")},
    "B0inf": {"f_pullback": "2*P0inf - k0 - 1 + 2*P0inf*(P0inf - k0)/R",
              "g_pullback": "-2*P0inf + k0 + k1 + 1 - 2*P0inf*(P0inf - k0)/R"},
    "Ainf": {("f_pullback", "plus"): "2*Pplus - k0",
             ("g_pullback", "plus"): "-2*Pplus + k0 + k1 + 1",
             ("f_pullback", "minus"): "2*Pminus - k0",
             ("g_pullback", "minus"): "-2*Pminus + k0 + k1 - 1"},
}

# normal form principal parts: point -> [A_n, ..., A_1]
NORMAL_FORM_PRINCIPAL = {
    "0": [("0", "1", "0", "-k0")],
    "1": [("0", "1", "0", "t"), ("0", "-1", "0", "-k1")],
    "q": [("0", "0", "phat", "-1")],
}
NORMAL_FORM_RESIDUE_INF = ("0", "-1", "rho", "k0 + k1 - 1")

# elm- at q applied to [[c11, c12], [c21, c22]] on O + O, transcribed literally
# (the published (2,2)-entry carries ω12)
ELM_EXAMPLE = ("c11", "(x - q)*c12", "c21/(x - q)", "c12 - 1/(x - q)")
ELM_EXAMPLE_DEGREE = 1

# local Riccati equations as displayed: (y^2, y^1, y^0) coefficients
RICCATI_DISPLAY_X0 = ("-1/x", "k0/x", "0")
RICCATI_DISPLAY_X1 = ("(x - 2)/(x - 1)^2", "(-k1*(x - 1) + t)/(x - 1)^2", "0")

# confluence
Q0_OBSTRUCTION = "beta*(beta + k0)"
Q1_OBSTRUCTIONS = ("-gamma^2 + (2*beta + k1)*gamma - beta*t", "gamma*(gamma - t)")
Q1_ADMISSIBLE = (("0", "0"), ("t - k1", "t"))       # (β, γ)
Q1_INVARIANT_P1 = ("0", "(k1 - 2*t)/t*(q - 1) - 1")

SECTION_Q0 = {"formula": "-phat/(q - 1)^2", "values": ("0", "-k0")}

RHO = "((k0 + k1 - 1)^2 - kinf^2)/4"

