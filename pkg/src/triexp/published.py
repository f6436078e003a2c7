"""The 15-term interpolant of Hungary's 1992-2021 GDP as printed, digits untouched."""

from .prony import ExponentialModel, ExpTerm

# (amplitude, exponent) in the printed order.
GDP_HU_TERMS = (
    (0.0195413177087921 - 0.0238509487595989j, 0.0890760204993891 + 2.84113084888033j),
    (0.0195413177087987 + 0.0238509487596027j, 0.0890760204993891 - 2.84113084888033j),
    (0.00571184169812315 + 0.00817725276894694j, 0.169771000605162 + 2.34979036975419j),
    (0.00571184169812215 - 0.00817725276894668j, 0.169771000605162 - 2.34979036975419j),
    (0.0316107337540147 - 0.05937760211869j, 0.0790763425127107 + 1.99859448050242j),
    (0.0316107337540011 + 0.0593776021186917j, 0.0790763425127107 - 1.99859448050242j),
    (0.00956506041001466 - 0.181512895422157j, 0.074610789188314 + 1.62641831734931j),
    (0.00956506041001267 + 0.181512895422141j, 0.074610789188314 - 1.62641831734931j),
    (-0.420119359378276 - 0.208128205453835j, 0.0752958024756055 + 1.26430179150643j),
    (-0.420119359378279 + 0.208128205453818j, 0.0752958024756055 - 1.26430179150643j),
    (-4.89462606606935 - 1.04056590652811j, -0.0220362770633638 + 0.587264406873871j),
    (-4.89462606606906 + 1.04056590652809j, -0.0220362770633638 - 0.587264406873871j),
    (42.5506406866118 + 1.77635683940025e-15j, 0.0541657791433195 + 0j),
    (1.66084975441488 + 7.54428165864417j, 0.0351795930091244 + 0.299849579082453j),
    (1.6608497544149 - 7.54428165864425j, 0.0351795930091244 - 0.299849579082453j),
)

GDP_HU_REAL_EXPONENT = 0.0541657791433195
GDP_HU_REAL_AMPLITUDE = 42.5506406866118


def gdp_hu_model() -> ExponentialModel:
    return ExponentialModel(tuple(ExpTerm(c, s) for c, s in GDP_HU_TERMS))
