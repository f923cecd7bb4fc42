from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The extension compiles the core sources directly; the CLI and sweep driver
# stay out of the python module.
core_sources = [
    "src/graph.cpp",
    "src/graph6.cpp",
    "src/families.cpp",
    "src/subsets.cpp",
    "src/enumerate.cpp",
    "src/token_graph.cpp",
    "src/matrix.cpp",
    "src/spectral.cpp",
    "src/multiset.cpp",
    "src/theory.cpp",
    "src/serialize.cpp",
]

ext = Pybind11Extension(
    "tokenspectra._core",
    sources=["python/bindings.cpp"] + core_sources,
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
