from .CheckRecord import *
from .CohomologyReport import *
from .RunConfig import *
from .VerificationSettings import *
