from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = [
    "src/py_module.cpp",
    "src/cf.cpp",
    "src/snake_graph.cpp",
    "src/matrices.cpp",
    "src/qpoly.cpp",
    "src/enumerate.cpp",
    "src/bracket.cpp",
    "src/genfun.cpp",
    "src/gcf.cpp",
    "src/serialize.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "snakegraphs._core",
            sources,
            include_dirs=["include", "vendor"],
            libraries=["gmpxx", "gmp"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
