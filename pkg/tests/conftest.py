import pytest

from condprob import _betakernel_py

_BACKENDS = {"python": _betakernel_py}
try:
    from condprob import _betakernel

    _BACKENDS["cython"] = _betakernel
except ImportError:
    pass


@pytest.fixture(params=sorted(_BACKENDS))
def kernel(request):
    """Each raw kernel backend available in this build."""
    return _BACKENDS[request.param]
