from collections import OrderedDict

DEFAULT_DEGREE_3D = 8
DEFAULT_DEGREE_2D = 6
CONFORMAL_DEGREE = 10
DEFAULT_JOBS = 1

MAX_FAMILY_DIM = 6
APPENDIX_MAX_DIM = 5
SIDENT_MAX_DIM = 6

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

OUTPUT_FORMATS = ["json", "csv", "pretty", "xlsx"]
SUITES = ["appendix1", "homotopy", "lemma8", "projection", "exactness", "dimension"]
ALL_SUITES = "all"
FAMILIES = ["altij", "derham"]

GOLDEN_PATH = "./golden/dimensions.json"
# caps at which golden/dimensions.json is generated: the smallest where every output space has a constant part
GOLDEN_DEGREES = {
    "hessian3d": 4, "elasticity3d": 4, "divdiv3d": 4,
    "gradcurl3d": 5, "curldiv3d": 5, "graddiv3d": 6,
    "conformal_elasticity3d": 5, "conformal_hessian3d_a": 5, "conformal_hessian3d_b": 5,
    "hessian2d": 4, "elasticity2d": 4, "gradrot2d": 4,
}
GOLDEN_FAMILY_DIMS = [2, 3, 4]
VERIFICATION_CONFIG_PATH = "verification_config.yaml"

# proxy fiber names and dimensions per ambient dimension (𝕄 coordinates are row-major)
PROXY_FIBERS = {
    3: OrderedDict({"R": 1, "V": 3, "M": 9, "S": 6, "T": 8, "K": 3, "ST": 5}),
    2: OrderedDict({"R": 1, "V": 2, "M": 4, "S": 3, "T": 3, "K": 1, "ST": 2}),
}

ALGEBRAIC_MAPS = ["skw", "sym", "tr", "iota", "dev", "mskw", "vskw", "sskw", "Sop", "transpose",
                  "id_R", "id_V", "id_M"]

# s^{i,J} in proxy coordinates: (i, J) -> (algebraic map, scale)
LINK_LABELS = {
    3: {
        (0, 1): ("id_V", 1), (1, 1): ("vskw", 2), (2, 1): ("tr", 1),
        (0, 2): ("mskw", -1), (1, 2): ("Sop", 1), (2, 2): ("vskw", 2),
        (0, 3): ("iota", 1), (1, 3): ("mskw", -1), (2, 3): ("id_V", 1),
    },
    2: {
        (0, 1): ("id_V", 1), (1, 1): ("sskw", -2),
        (0, 2): ("mskw", 1), (1, 2): ("id_V", 1),
    },
}

# Two kinds of entries:
#   "rows": de Rham rows (top J, bottom J') in proxy coordinates; the bottom row is shifted
#           right by J' - J - 1 places and linked by composites of s scaled by "coefficients".
#   "top"/"bottom": output complexes of other entries (or "derham" rows) used as input rows,
#           with degree caps shifted by "top_shift"/"bottom_shift" and pointwise "links".
NAMED_DIAGRAMS = OrderedDict({
    "hessian3d": {
        "n": 3, "rows": (0, 1), "J": 0,
        "fibers": ("R", "S", "T", "V"), "fiber_dims": (1, 6, 8, 3), "cohomology": (4, 0, 0, 0),
    },
    "elasticity3d": {
        "n": 3, "rows": (1, 2), "J": 1,
        "fibers": ("V", "S", "S", "V"), "fiber_dims": (3, 6, 6, 3), "cohomology": (6, 0, 0, 0),
    },
    "divdiv3d": {
        "n": 3, "rows": (2, 3), "J": 2,
        "fibers": ("V", "T", "S", "R"), "fiber_dims": (3, 8, 6, 1), "cohomology": (4, 0, 0, 0),
    },
    "gradcurl3d": {
        "n": 3, "rows": (0, 2), "coefficients": {1: "-1/2", 2: "1/2"}, "J": 1,
        "fibers": ("R", "V", "T", "M", "V"), "fiber_dims": (1, 3, 8, 9, 3), "cohomology": (1, 3, 0, 0, 0),
    },
    "curldiv3d": {
        "n": 3, "rows": (1, 3), "coefficients": {1: "-1/2", 2: "1/2"}, "J": 2,
        "fibers": ("V", "M", "T", "V", "R"), "fiber_dims": (3, 9, 8, 3, 1), "cohomology": (3, 1, 0, 0, 0),
    },
    "graddiv3d": {
        "n": 3, "rows": (0, 3), "coefficients": {2: "-1/6"}, "J": 2,
        "fibers": ("R", "V", "V", "V", "V", "R"), "fiber_dims": (1, 3, 3, 3, 3, 1),
        "cohomology": (1, 0, 1, 0, 0, 0),
    },
    "conformal_elasticity3d": {
        "n": 3, "top": "divdiv3d", "bottom": "elasticity3d", "top_shift": 0, "bottom_shift": -1,
        "links": (("mskw", -1), ("Sop", 1), ("tr", 1)), "J": 1, "degree": CONFORMAL_DEGREE,
        "fibers": ("V", "ST", "ST", "V"), "fiber_dims": (3, 5, 5, 3), "cohomology": (10, 0, 0, 0),
    },
    "conformal_hessian3d_a": {
        "n": 3, "top": "hessian3d", "bottom": "derham", "top_shift": 0, "bottom_shift": -2,
        "links": (("iota", 1), ("mskw", -1), ("id_V", 1)), "J": 2,
        "fibers": ("R", "ST", "ST", "R"), "fiber_dims": (1, 5, 5, 1), "cohomology": (5, 0, 0, 0),
    },
    "conformal_hessian3d_b": {
        "n": 3, "top": "derham", "bottom": "divdiv3d", "top_shift": 0, "bottom_shift": -1,
        "links": (("id_V", 1), ("vskw", 2), ("tr", 1)), "J": 0,
        "fibers": ("R", "ST", "ST", "R"), "fiber_dims": (1, 5, 5, 1), "cohomology": (5, 0, 0, 0),
    },
    "hessian2d": {
        "n": 2, "rows": (0, 1), "J": 0,
        "fibers": ("R", "S", "V"), "fiber_dims": (1, 3, 2), "cohomology": (3, 0, 0),
    },
    "elasticity2d": {
        "n": 2, "rows": (1, 2), "J": 1,
        "fibers": ("V", "S", "R"), "fiber_dims": (2, 3, 1), "cohomology": (3, 0, 0),
    },
    "gradrot2d": {
        "n": 2, "rows": (0, 2), "coefficients": {1: "-1/2"}, "J": 1,
        "fibers": ("R", "V", "V", "R"), "fiber_dims": (1, 2, 2, 1), "cohomology": (1, 1, 0, 0),
    },
    "conformal2d_fail": {
        "n": 2, "top": "elasticity2d", "bottom": "hessian2d", "top_shift": 0, "bottom_shift": -1,
        "links": (("iota", 1), ("tr", -1)), "J": None, "expect": "NoValidJ",
    },
})

OPERATOR_IDENTITIES = ["inc_sym_transpose", "inc_skew_zero", "cinc_three_forms", "curl_sym_tracefree"]


def get_named_info(name):
    return NAMED_DIAGRAMS.get(name, {})


def default_degree(name=None, n=3, override=None):
    """Degree cap used when none is given. A diagram's own "degree" wins over `override`."""
    info = NAMED_DIAGRAMS.get(name, {})
    if "degree" in info:
        return info["degree"]
    if override is not None:
        return override
    n = info.get("n", n)
    return DEFAULT_DEGREE_3D if n == 3 else DEFAULT_DEGREE_2D


def valid_named():
    return [name for name, info in NAMED_DIAGRAMS.items() if info.get("J") is not None]


class RunDefaults:
    """Run-wide defaults taken from the environment."""

    def __init__(self, jobs=DEFAULT_JOBS, degree=None):
        self.jobs = jobs
        self.degree = degree

    @classmethod
    def from_env(cls, environ):
        """Build defaults from BGGC_JOBS and BGGC_DEGREE.

        Args:
            environ: mapping of environment variables (usually os.environ)
        """
        jobs = environ.get("BGGC_JOBS", "").strip()
        degree = environ.get("BGGC_DEGREE", "").strip()
        return cls(
            jobs=int(jobs) if jobs.isdigit() and int(jobs) >= 1 else DEFAULT_JOBS,
            degree=int(degree) if degree.isdigit() else None,
        )
