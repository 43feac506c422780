namespace cfa {}
