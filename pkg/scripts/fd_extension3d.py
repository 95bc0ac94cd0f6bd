import numpy as np

from compas_fdcrack.extension3d import PointSide
from compas_fdcrack.extension3d import TriSurface
from compas_fdcrack.extension3d import build_extension
from compas_fdcrack.extension3d import classify_points

# a wavy strip of 20 triangles with alternating winding
count = 10
vertices = []
for i in range(count + 1):
    z = 0.2 * np.sin(i)
    vertices.append([i, 0.0, z])
    vertices.append([i, 1.0, z])

triangles = []
for i in range(count):
    a, b, c, d = 2 * i, 2 * i + 2, 2 * i + 3, 2 * i + 1
    triangles.append([a, b, c] if i % 2 else [a, c, b])
    triangles.append([a, c, d] if i % 2 else [a, d, c])

surface = TriSurface(vertices, triangles)
extension = build_extension(surface, seed_sign=1, scale=1.0)

print(extension)
print("volume of the plus region: {:.4f}".format(extension.region_volume()))

points = np.random.uniform([-1.0, -1.0, -1.0], [count + 1.0, 2.0, 1.0], size=(1000, 3))
sides = classify_points(extension, points)
for side in PointSide:
    print("{:>8s}: {}".format(side.name, int(np.sum(sides == side))))
