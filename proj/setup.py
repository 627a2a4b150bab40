import subprocess
import sys
from pathlib import Path

import pybind11
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        src = Path(__file__).resolve().parent
        subprocess.run(
            [
                "cmake",
                str(src),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DMGL_BUILD_PYTHON=ON",
                "-DSKBUILD=ON",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_mgl"], check=True)
        out.mkdir(parents=True, exist_ok=True)
        for so in (build_dir / "python" / "momentgaplab").glob("_mgl*"):
            self.copy_file(str(so), str(out / so.name))


setup(
    ext_modules=[CMakeExtension("momentgaplab._mgl")],
    cmdclass={"build_ext": CMakeBuild},
)
