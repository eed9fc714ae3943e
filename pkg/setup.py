from setuptools import setup, find_packages

setup(
    name='iocodes',
    version='0.1',
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    python_requires='>=3.10',
    install_requires=[
        'networkx',
        'numpy',
        'pandas',
        'environs',
        'joblib',
        'tqdm',
    ],
    entry_points={
        'console_scripts': ['iocodes=iocodes.cli:main'],
    },
)
