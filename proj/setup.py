import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = sorted(
    s for s in glob.glob("src/*.cpp") if not s.endswith("cli.cpp"))

ext = Pybind11Extension(
    "orbidim._orbidim",
    sources,
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
